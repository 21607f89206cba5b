// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The orthorelay Authors
//
// Umbrella header.

#pragma once

#include "orthorelay/core.hpp"
#include "orthorelay/optimizer.hpp"
#include "orthorelay/awgn_rates.hpp"
#include "orthorelay/fading.hpp"
#include "orthorelay/fading_rates.hpp"
#include "orthorelay/experiments.hpp"
