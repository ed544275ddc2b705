#pragma once

#include "tropdet/assignment.hpp"
#include "tropdet/bounds.hpp"
#include "tropdet/constructions.hpp"
#include "tropdet/error.hpp"
#include "tropdet/matrix.hpp"
#include "tropdet/oracle.hpp"
#include "tropdet/params.hpp"
