#ifndef EMOA_EMOA_HPP_
#define EMOA_EMOA_HPP_

#include "emoa/core.hpp"
#include "emoa/harness.hpp"
#include "emoa/objective.hpp"
#include "emoa/problems.hpp"
#include "emoa/ranking.hpp"
#include "emoa/sms_emoa.hpp"
#include "emoa/statistics.hpp"
#include "emoa/update.hpp"

#endif  // EMOA_EMOA_HPP_
