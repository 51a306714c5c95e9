#pragma once

#include "flowerfr/capacity.hpp"
#include "flowerfr/errors.hpp"
#include "flowerfr/flower.hpp"
#include "flowerfr/frcode.hpp"
#include "flowerfr/generator.hpp"
#include "flowerfr/io.hpp"
#include "flowerfr/oracle.hpp"
#include "flowerfr/repair.hpp"
#include "flowerfr/rng.hpp"
#include "flowerfr/sequence.hpp"
