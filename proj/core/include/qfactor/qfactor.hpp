#pragma once

#include "qfactor/entropy.hpp"
#include "qfactor/errors.hpp"
#include "qfactor/heatbath.hpp"
#include "qfactor/hermitian.hpp"
#include "qfactor/layout.hpp"
#include "qfactor/quadrature.hpp"
#include "qfactor/quasi_factorization.hpp"
#include "qfactor/random.hpp"
#include "qfactor/states.hpp"
#include "qfactor/tensor.hpp"
