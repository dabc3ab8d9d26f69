#pragma once

#include "lorentzqi/angles.hpp"
#include "lorentzqi/errors.hpp"
#include "lorentzqi/lorentz.hpp"
#include "lorentzqi/measures.hpp"
#include "lorentzqi/qmath.hpp"
#include "lorentzqi/states.hpp"
#include "lorentzqi/sweep.hpp"
