#pragma once

#include "ppforge/algebras.hpp"
#include "ppforge/bialgebra.hpp"
#include "ppforge/catalog.hpp"
#include "ppforge/geometry.hpp"
#include "ppforge/io.hpp"
#include "ppforge/representations.hpp"
#include "ppforge/rota_baxter.hpp"
#include "ppforge/yang_baxter.hpp"
