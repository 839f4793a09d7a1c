#pragma once

#include "tropdegen/amoeba.hpp"
#include "tropdegen/converge.hpp"
#include "tropdegen/hybrid.hpp"
#include "tropdegen/io.hpp"
#include "tropdegen/parallel.hpp"
#include "tropdegen/point_cloud.hpp"
#include "tropdegen/poly.hpp"
#include "tropdegen/roots.hpp"
#include "tropdegen/toric.hpp"
#include "tropdegen/tropical.hpp"
