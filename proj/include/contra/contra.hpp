#pragma once

#include "contra/cyclotomic.hpp"
#include "contra/polynomial.hpp"
#include "contra/linalg.hpp"
#include "contra/report.hpp"
#include "contra/algebra.hpp"
#include "contra/expression.hpp"
#include "contra/hopf.hpp"
#include "contra/double.hpp"
#include "contra/dg.hpp"
#include "contra/catalogue.hpp"
