#pragma once

#include "rankagg/adversarial.hpp"
#include "rankagg/errors.hpp"
#include "rankagg/exact.hpp"
#include "rankagg/markov.hpp"
#include "rankagg/permutation.hpp"
#include "rankagg/preference.hpp"
#include "rankagg/profile.hpp"
#include "rankagg/profile_io.hpp"
#include "rankagg/report.hpp"
#include "rankagg/tournament.hpp"
