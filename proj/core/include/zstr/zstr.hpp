#pragma once

#include "zstr/errors.hpp"
#include "zstr/eta.hpp"
#include "zstr/gamma.hpp"
#include "zstr/geometry.hpp"
#include "zstr/strings.hpp"
#include "zstr/zeros.hpp"
