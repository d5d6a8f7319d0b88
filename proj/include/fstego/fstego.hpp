#pragma once

#include "fstego/arnold.hpp"
#include "fstego/errors.hpp"
#include "fstego/fft.hpp"
#include "fstego/fresnel.hpp"
#include "fstego/fresnelet.hpp"
#include "fstego/grid.hpp"
#include "fstego/image_io.hpp"
#include "fstego/key_file.hpp"
#include "fstego/metrics.hpp"
#include "fstego/pipeline.hpp"
#include "fstego/wavelet_dct.hpp"
