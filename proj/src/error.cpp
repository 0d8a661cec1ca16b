#include "zariski/error.hpp"

namespace zariski {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ModulusMismatch: return "ModulusMismatch";
        case ErrorCode::InvalidModulus: return "InvalidModulus";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::SingularCurve: return "SingularCurve";
        case ErrorCode::PointOffCurve: return "PointOffCurve";
        case ErrorCode::TorsionNotRational: return "TorsionNotRational";
        case ErrorCode::InflectionBasePoint: return "InflectionBasePoint";
        case ErrorCode::FanNotRational: return "FanNotRational";
        case ErrorCode::DegenerateFan: return "DegenerateFan";
        case ErrorCode::NotTangentConfiguration: return "NotTangentConfiguration";
        case ErrorCode::BadIndexPair: return "BadIndexPair";
        case ErrorCode::DuplicateBasePoint: return "DuplicateBasePoint";
        case ErrorCode::DuplicateLine: return "DuplicateLine";
        case ErrorCode::ConcurrentLines: return "ConcurrentLines";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::SamePairQuery: return "SamePairQuery";
        case ErrorCode::BadPartition: return "BadPartition";
        case ErrorCode::InsufficientPoints: return "InsufficientPoints";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

}  // namespace zariski
