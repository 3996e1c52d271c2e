#pragma once

#include "cycdom/bounds.hpp"
#include "cycdom/construct.hpp"
#include "cycdom/core.hpp"
#include "cycdom/domset_io.hpp"
#include "cycdom/gamma.hpp"
#include "cycdom/solver.hpp"
