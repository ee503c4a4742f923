#pragma once

#include "mec/bounds.hpp"
#include "mec/coupling.hpp"
#include "mec/dist.hpp"
#include "mec/error.hpp"
#include "mec/majorization.hpp"
#include "mec/reference_families.hpp"
#include "mec/spectrum.hpp"
