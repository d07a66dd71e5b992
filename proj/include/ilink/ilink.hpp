#pragma once

#include "ilink/complex.hpp"
#include "ilink/complex_io.hpp"
#include "ilink/config.hpp"
#include "ilink/errors.hpp"
#include "ilink/geometry.hpp"
#include "ilink/isomorphism.hpp"
#include "ilink/rational.hpp"
#include "ilink/report.hpp"
#include "ilink/spheres.hpp"
#include "ilink/verify.hpp"
