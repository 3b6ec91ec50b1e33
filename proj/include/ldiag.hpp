#ifndef LDIAG_LDIAG_HPP
#define LDIAG_LDIAG_HPP

#include "ldiag/error.hpp"
#include "ldiag/weight_matrix.hpp"
#include "ldiag/diagram.hpp"
#include "ldiag/enumerate.hpp"
#include "ldiag/deform_poly.hpp"
#include "ldiag/linear_combination.hpp"
#include "ldiag/product.hpp"
#include "ldiag/hopf.hpp"
#include "ldiag/mqsym_oracle.hpp"
#include "ldiag/polyzeta.hpp"
#include "ldiag/text_io.hpp"

#endif
