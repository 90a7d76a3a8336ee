#pragma once

#include "twinsieve/classifier.hpp"
#include "twinsieve/errors.hpp"
#include "twinsieve/forms.hpp"
#include "twinsieve/oracle.hpp"
#include "twinsieve/output.hpp"
#include "twinsieve/runs.hpp"
#include "twinsieve/sieve.hpp"
#include "twinsieve/verify.hpp"
