#pragma once
#include <stdexcept>
#include <string>

namespace nbt {

/// Base class for all library errors.  Every throwing code path uses a named
/// subclass so callers (and the CLI) can distinguish bad input from internal
/// inconsistency.
struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

#define NBT_ERROR(Name)                                                \
    struct Name : Error {                                              \
        explicit Name(const std::string& m) : Error(#Name ": " + m) {} \
    }

NBT_ERROR(NotPrime);
NBT_ERROR(NotADivisor);
NBT_ERROR(ZeroElement);
NBT_ERROR(FieldMismatch);
NBT_ERROR(DivisionByZeroPoly);
NBT_ERROR(ZeroConstantTerm);
NBT_ERROR(NotIrreducible);
NBT_ERROR(NotABasis);
NBT_ERROR(NotCoprime);
NBT_ERROR(EmbeddingFailure);
NBT_ERROR(WrongShape);
NBT_ERROR(SingularCirculant);
NBT_ERROR(DegreeTooLarge);
NBT_ERROR(BadOrder);
NBT_ERROR(BadResidueClass);
NBT_ERROR(NotNormal);
NBT_ERROR(HypothesisViolated);
NBT_ERROR(NoPartition);
NBT_ERROR(MethodInapplicable);
NBT_ERROR(WindowExceeded);
NBT_ERROR(ZeroDiscriminant);
NBT_ERROR(NotFoundWithinBound);
NBT_ERROR(CharacteristicDividesR);
NBT_ERROR(DegenerateDegree);
NBT_ERROR(CharacteristicTooSmall);
NBT_ERROR(TooLarge);
NBT_ERROR(CacheCorrupt);
NBT_ERROR(InternalCheck);

#undef NBT_ERROR

/// Runtime consistency check that stays on in optimized builds.  Used where
/// two independent computations must agree or an algebraic identity must hold.
inline void require(bool cond, const std::string& what) {
    if (!cond) throw InternalCheck(what);
}

}  // namespace nbt
