#pragma once

#include "characters.hpp"
#include "cli.hpp"
#include "cyclotomic.hpp"
#include "group.hpp"
#include "local.hpp"
#include "monomial.hpp"
#include "numeric.hpp"
#include "packets.hpp"
#include "projective.hpp"
#include "report.hpp"
#include "types.hpp"
#include "verify.hpp"
