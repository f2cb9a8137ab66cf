#pragma once

#include "horikawa/picard.hpp"
#include "horikawa/linsys.hpp"
#include "horikawa/cover.hpp"
#include "horikawa/canonical.hpp"
#include "horikawa/construct.hpp"
#include "horikawa/serialize.hpp"
#include "horikawa/certificate.hpp"
