#pragma once

// Umbrella header.
#include "twojoin/detect.hpp"
#include "twojoin/errors.hpp"
#include "twojoin/forcing.hpp"
#include "twojoin/gen.hpp"
#include "twojoin/graph.hpp"
#include "twojoin/io.hpp"
#include "twojoin/oracle.hpp"
#include "twojoin/split.hpp"
#include "twojoin/universal.hpp"
