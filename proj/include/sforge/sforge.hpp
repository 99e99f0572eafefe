#ifndef SFORGE_SFORGE_HPP
#define SFORGE_SFORGE_HPP

#include "types.hpp"
#include "partition.hpp"
#include "closure_system.hpp"
#include "semilattice.hpp"
#include "morphism.hpp"
#include "semiring.hpp"
#include "semiring_constructions.hpp"
#include "semimodule.hpp"
#include "conditions.hpp"
#include "box_construction.hpp"
#include "characterize.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "worked_examples.hpp"
#include "conjectures.hpp"

#endif // SFORGE_SFORGE_HPP
