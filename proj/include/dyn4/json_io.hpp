#pragma once

#include <nlohmann_fwd_guard__not_used.hpp>
