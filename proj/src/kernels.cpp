#include "lbie/kernels.hpp"

namespace lbie {

const char* to_string(KernelKind kind)
{
    switch (kind) {
    case KernelKind::Single: return "S";
    case KernelKind::Double: return "D";
    case KernelKind::SinglePrime: return "S'";
    case KernelKind::DiffSum: return "S''+D'";
    }
    return "?";
}

}  // namespace lbie
