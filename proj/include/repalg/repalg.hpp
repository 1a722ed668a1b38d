#pragma once

#include "scalar.hpp"
#include "truncated.hpp"
#include "matrix.hpp"
#include "linalg.hpp"
#include "quiver.hpp"
#include "representation.hpp"
#include "frobenius.hpp"
#include "strings.hpp"
#include "deformation.hpp"
#include "orbit.hpp"
#include "io.hpp"
