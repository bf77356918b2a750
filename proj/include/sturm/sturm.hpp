#pragma once

#include <sturm/continued_fraction.hpp>
#include <sturm/derset.hpp>
#include <sturm/mechanical.hpp>
#include <sturm/morphism.hpp>
#include <sturm/name.hpp>
#include <sturm/quadratic.hpp>
#include <sturm/verify.hpp>
#include <sturm/word_stream.hpp>
#include <sturm/words.hpp>
