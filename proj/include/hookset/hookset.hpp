#pragma once

#include "hookset/criterion.hpp"
#include "hookset/format.hpp"
#include "hookset/hooks.hpp"
#include "hookset/multiset.hpp"
#include "hookset/partition.hpp"
#include "hookset/search.hpp"
