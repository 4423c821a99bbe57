#pragma once

#include "nchospec/analysis.hpp"
#include "nchospec/eigensolve.hpp"
#include "nchospec/enclosure.hpp"
#include "nchospec/errors.hpp"
#include "nchospec/gapcert.hpp"
#include "nchospec/jacobi.hpp"
#include "nchospec/params.hpp"
#include "nchospec/tridiag.hpp"
#include "nchospec/version.hpp"
