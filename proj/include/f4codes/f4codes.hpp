#ifndef F4CODES_F4CODES_HPP
#define F4CODES_F4CODES_HPP

#include "gf4.hpp"
#include "f4vec.hpp"
#include "errors.hpp"
#include "code.hpp"
#include "perm.hpp"
#include "skew.hpp"
#include "s_map.hpp"
#include "ext_field.hpp"
#include "wenum.hpp"
#include "aqc.hpp"
#include "rs_concat.hpp"

#endif
