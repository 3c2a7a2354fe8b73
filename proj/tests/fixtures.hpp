#pragma once

#include "vhx/io.hpp"
#include "vhx/vhx.hpp"

#include <string>

inline vhx::RotationSystem fixture(const std::string& name) {
    return vhx::parse_vpd(vhx::read_file(std::string(VHX_FIXTURES) + "/" + name + ".vpd"));
}

// center joined by three bridges to vertices carrying loops
inline vhx::RotationSystem lollipop3() { return vhx::parse_vpd("G[V[1,3,5],V[2,7,8],V[4,9,10],V[6,11,12]]"); }

// loop, bridge, loop
inline vhx::RotationSystem dumbbell() { return vhx::parse_vpd("G[V[1,2,3],V[4,5,6]]"); }
