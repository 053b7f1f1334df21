#pragma once

#include "bargheat/polygauss.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

// Written as a bare comparison so doctest prints both sides on failure.
#define CHECK_NEAR(v, e, tol) CHECK(std::abs(::bargheat::cplx(v) - ::bargheat::cplx(e)) <= (tol))
#define CHECK_REL(v, e, tol) \
    CHECK(std::abs(::bargheat::cplx(v) - ::bargheat::cplx(e)) / std::max(1.0, std::abs(::bargheat::cplx(e))) <= (tol))
