#pragma once

#include "weakpi/bijection.hpp"
#include "weakpi/carray.hpp"
#include "weakpi/error.hpp"
#include "weakpi/grassmann.hpp"
#include "weakpi/io.hpp"
#include "weakpi/krs.hpp"
#include "weakpi/oracle.hpp"
#include "weakpi/poly.hpp"
#include "weakpi/rational.hpp"
#include "weakpi/series.hpp"
#include "weakpi/straighten.hpp"
#include "weakpi/tableaux.hpp"
