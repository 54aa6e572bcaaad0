#pragma once

#include "hankel_fh/applications.hpp"
#include "hankel_fh/asymptotics.hpp"
#include "hankel_fh/cheb.hpp"
#include "hankel_fh/equilibrium.hpp"
#include "hankel_fh/errors.hpp"
#include "hankel_fh/gauss.hpp"
#include "hankel_fh/mp.hpp"
#include "hankel_fh/oracle.hpp"
#include "hankel_fh/special.hpp"
#include "hankel_fh/spec_io.hpp"
#include "hankel_fh/weight.hpp"
