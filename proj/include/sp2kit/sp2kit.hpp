#pragma once

#include "sp2kit/errors.hpp"
#include "sp2kit/lorentz.hpp"
#include "sp2kit/oscillator.hpp"
#include "sp2kit/sp2.hpp"
#include "sp2kit/wigner.hpp"
