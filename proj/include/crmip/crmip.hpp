#pragma once

#include "crmip/errors.hpp"
#include "crmip/handoff_distribution.hpp"
#include "crmip/link_delay.hpp"
#include "crmip/mipv6_latency.hpp"
#include "crmip/montecarlo_oracle.hpp"
#include "crmip/rng.hpp"
#include "crmip/scenario.hpp"
#include "crmip/sweep.hpp"
#include "crmip/traffic_model.hpp"
#include "crmip/validate.hpp"
