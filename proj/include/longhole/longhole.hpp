#ifndef LONGHOLE_LONGHOLE_HPP
#define LONGHOLE_LONGHOLE_HPP

#include "longhole/bitset.hpp"
#include "longhole/clean_detector.hpp"
#include "longhole/cleaner.hpp"
#include "longhole/configurations.hpp"
#include "longhole/driver.hpp"
#include "longhole/enumerate.hpp"
#include "longhole/format.hpp"
#include "longhole/generate.hpp"
#include "longhole/graph.hpp"
#include "longhole/marker.hpp"
#include "longhole/oracle.hpp"
#include "longhole/params.hpp"
#include "longhole/path.hpp"
#include "longhole/search.hpp"

#endif
