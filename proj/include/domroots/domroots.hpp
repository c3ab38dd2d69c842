#pragma once

#include "domroots/bigint.hpp"
#include "domroots/counting.hpp"
#include "domroots/error.hpp"
#include "domroots/families.hpp"
#include "domroots/graph.hpp"
#include "domroots/graph6.hpp"
#include "domroots/lexprod.hpp"
#include "domroots/polynomial.hpp"
#include "domroots/roots.hpp"
#include "domroots/sturm.hpp"
#include "domroots/svg.hpp"
