#pragma once

#include "cyclo/code.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/distance.hpp"
#include "cyclo/error.hpp"
#include "cyclo/field.hpp"
#include "cyclo/matrix.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/record.hpp"
#include "cyclo/serialize.hpp"
#include "cyclo/tensor.hpp"
#include "cyclo/verify.hpp"
