#ifndef ALUTHGE_ALUTHGE_HPP
#define ALUTHGE_ALUTHGE_HPP

#include "aluthge/io.hpp"
#include "aluthge/linalg.hpp"
#include "aluthge/polar.hpp"
#include "aluthge/radii.hpp"
#include "aluthge/transform.hpp"
#include "aluthge/tuple.hpp"
#include "aluthge/verify.hpp"

#endif  // ALUTHGE_ALUTHGE_HPP
