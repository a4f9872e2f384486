// Umbrella header: pulls in the whole public surface.
#pragma once

#include "hamiltonia/cache.hpp"
#include "hamiltonia/catalog.hpp"
#include "hamiltonia/dense.hpp"
#include "hamiltonia/error.hpp"
#include "hamiltonia/gf.hpp"
#include "hamiltonia/iso.hpp"
#include "hamiltonia/lattice.hpp"
#include "hamiltonia/limits.hpp"
#include "hamiltonia/perm.hpp"
#include "hamiltonia/perm_group.hpp"
#include "hamiltonia/predicates.hpp"
#include "hamiltonia/structure.hpp"
#include "hamiltonia/verify.hpp"
