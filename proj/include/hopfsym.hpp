#pragma once

#include "hopfsym/characters.hpp"
#include "hopfsym/expr.hpp"
#include "hopfsym/groups.hpp"
#include "hopfsym/io.hpp"
#include "hopfsym/partition.hpp"
#include "hopfsym/plethysm.hpp"
#include "hopfsym/schur.hpp"
#include "hopfsym/series.hpp"
#include "hopfsym/table_cache.hpp"
#include "hopfsym/twist.hpp"
