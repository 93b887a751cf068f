#pragma once

#include "bar.hpp"
#include "koszul.hpp"
#include "regmorph.hpp"
#include "suites.hpp"
#include "io.hpp"
#include "tensor.hpp"
