#pragma once

#include "naples/bijection.hpp"
#include "naples/census.hpp"
#include "naples/components.hpp"
#include "naples/core.hpp"
#include "naples/reflections.hpp"
#include "naples/rules.hpp"
#include "naples/ties.hpp"
