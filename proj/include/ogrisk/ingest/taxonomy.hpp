#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ogrisk::ingest {

enum class AttackCategory {
    ResponseInjection,
    CommandInjection,
    DoS,
    Reconnaissance,
    Normal,
};

enum class SpecificAttack {
    NaiveMaliciousResponseInjection,
    ComplexMaliciousResponseInjection,
    MaliciousStateCommandInjection,
    MaliciousParameterCommandInjection,
    MaliciousFunctionCodeInjection,
    DenialOfService,
    InterruptionReconnaissance,
    Normal,
};

const char* category_name(AttackCategory c);
const char* specific_name(SpecificAttack a);

std::optional<AttackCategory> parse_category(std::string_view text);
std::optional<SpecificAttack> parse_specific(std::string_view text);

/// The seven-attack taxonomy is a function: each specific attack belongs to
/// exactly one category.
AttackCategory category_of(SpecificAttack a);

} // namespace ogrisk::ingest
