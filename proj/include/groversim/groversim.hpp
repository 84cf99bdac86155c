#pragma once

#include "groversim/amplitude.hpp"
#include "groversim/errors.hpp"
#include "groversim/grover.hpp"
#include "groversim/oracle.hpp"
#include "groversim/pathsum.hpp"
#include "groversim/reversible.hpp"
#include "groversim/transforms.hpp"
