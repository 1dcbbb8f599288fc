#include "rowmotion/matrix.hpp"

namespace rowmotion {

template class MatrixRealm<PrimeFieldOps>;
template class MatrixRealm<RationalOps>;

}  // namespace rowmotion
