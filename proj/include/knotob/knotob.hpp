#pragma once

#include "knotob/batch.hpp"
#include "knotob/diagram.hpp"
#include "knotob/errors.hpp"
#include "knotob/kauffman.hpp"
#include "knotob/laurent.hpp"
#include "knotob/obstruction.hpp"
#include "knotob/rational.hpp"
#include "knotob/report_io.hpp"
#include "knotob/seifert.hpp"
#include "knotob/selftest.hpp"
#include "knotob/twoloop.hpp"
