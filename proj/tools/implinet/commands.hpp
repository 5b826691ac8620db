#pragma once

#include "implinet/options.hpp"

namespace implinet::cli {

int cmd_grow(const Settings& s);
int cmd_analyze(const Settings& s);
int cmd_sweep(const Settings& s);
int cmd_reproduce(const Settings& s);

}  // namespace implinet::cli
