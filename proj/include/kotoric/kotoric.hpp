#pragma once

#include "kotoric/dj.hpp"
#include "kotoric/integer.hpp"
#include "kotoric/io.hpp"
#include "kotoric/ko.hpp"
#include "kotoric/ku.hpp"
#include "kotoric/linalg.hpp"
#include "kotoric/simplicial.hpp"
#include "kotoric/text.hpp"
#include "kotoric/toric.hpp"
