#pragma once

#include "foxdiv/error.hpp"
#include "foxdiv/family.hpp"
#include "foxdiv/fox.hpp"
#include "foxdiv/groupring.hpp"
#include "foxdiv/gsbasis.hpp"
#include "foxdiv/io.hpp"
#include "foxdiv/ncpoly.hpp"
#include "foxdiv/witness.hpp"
#include "foxdiv/words.hpp"
