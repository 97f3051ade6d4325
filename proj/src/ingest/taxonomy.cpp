#include "ogrisk/ingest/taxonomy.hpp"

#include "ogrisk/text.hpp"

namespace ogrisk::ingest {

const char* category_name(AttackCategory c) {
    switch (c) {
    case AttackCategory::ResponseInjection: return "Response Injection";
    case AttackCategory::CommandInjection: return "Command Injection";
    case AttackCategory::DoS: return "Denial of Service";
    case AttackCategory::Reconnaissance: return "Reconnaissance";
    case AttackCategory::Normal: return "Normal";
    }
    return "Unknown";
}

const char* specific_name(SpecificAttack a) {
    switch (a) {
    case SpecificAttack::NaiveMaliciousResponseInjection:
        return "Naive Malicious Response Injection";
    case SpecificAttack::ComplexMaliciousResponseInjection:
        return "Complex Malicious Response Injection";
    case SpecificAttack::MaliciousStateCommandInjection:
        return "Malicious State Command Injection";
    case SpecificAttack::MaliciousParameterCommandInjection:
        return "Malicious Parameter Command Injection";
    case SpecificAttack::MaliciousFunctionCodeInjection:
        return "Malicious Function Code Injection";
    case SpecificAttack::DenialOfService:
        return "Denial of Service";
    case SpecificAttack::InterruptionReconnaissance:
        return "Interruption Reconnaissance";
    case SpecificAttack::Normal:
        return "Normal";
    }
    return "Unknown";
}

std::optional<AttackCategory> parse_category(std::string_view text) {
    std::string t = normalize_label(text);
    if (t == "response injection") return AttackCategory::ResponseInjection;
    if (t == "command injection") return AttackCategory::CommandInjection;
    if (t == "denial of service" || t == "dos") return AttackCategory::DoS;
    if (t == "reconnaissance") return AttackCategory::Reconnaissance;
    if (t == "normal") return AttackCategory::Normal;
    return std::nullopt;
}

std::optional<SpecificAttack> parse_specific(std::string_view text) {
    std::string t = normalize_label(text);
    // "naive" appears with and without the diaeresis in the source data
    if (t == "naive malicious response injection" ||
        t == "na\xc3\xafve malicious response injection") {
        return SpecificAttack::NaiveMaliciousResponseInjection;
    }
    if (t == "complex malicious response injection")
        return SpecificAttack::ComplexMaliciousResponseInjection;
    if (t == "malicious state command injection")
        return SpecificAttack::MaliciousStateCommandInjection;
    if (t == "malicious parameter command injection")
        return SpecificAttack::MaliciousParameterCommandInjection;
    if (t == "malicious function code injection")
        return SpecificAttack::MaliciousFunctionCodeInjection;
    if (t == "denial of service" || t == "dos")
        return SpecificAttack::DenialOfService;
    if (t == "interruption reconnaissance")
        return SpecificAttack::InterruptionReconnaissance;
    if (t == "normal")
        return SpecificAttack::Normal;
    return std::nullopt;
}

AttackCategory category_of(SpecificAttack a) {
    switch (a) {
    case SpecificAttack::NaiveMaliciousResponseInjection:
    case SpecificAttack::ComplexMaliciousResponseInjection:
        return AttackCategory::ResponseInjection;
    case SpecificAttack::MaliciousStateCommandInjection:
    case SpecificAttack::MaliciousParameterCommandInjection:
    case SpecificAttack::MaliciousFunctionCodeInjection:
        return AttackCategory::CommandInjection;
    case SpecificAttack::DenialOfService:
        return AttackCategory::DoS;
    case SpecificAttack::InterruptionReconnaissance:
        return AttackCategory::Reconnaissance;
    case SpecificAttack::Normal:
        return AttackCategory::Normal;
    }
    return AttackCategory::Normal;
}

} // namespace ogrisk::ingest
