#include "rostering/instance.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace rostering {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& message) { throw std::runtime_error(message); }

}  // namespace

ShiftPattern ShiftPattern::from_cover_string(const std::string& cover) {
    if (cover.size() != kSlotsPerWeek)
        fail("cover: string must have 14 characters, got " + std::to_string(cover.size()));
    std::uint16_t bits = 0;
    for (int p = 0; p < kSlotsPerWeek; ++p) {
        const char c = cover[p];
        if (c != '0' && c != '1') fail("cover: character at position " +
                                       std::to_string(p + 1) + " must be 0 or 1");
        if (c == '1') bits |= static_cast<std::uint16_t>(1u << (kSlotsPerWeek - 1 - p));
    }
    return from_bits(bits);
}

ShiftPattern ShiftPattern::from_bits(std::uint16_t bits) {
    ShiftPattern p;
    p.bits_ = bits;
    return p;
}

int ShiftPattern::shift_count() const { return std::popcount(bits_); }

bool ShiftPattern::pure_day() const {
    return (bits_ & ((1u << kDaysPerWeek) - 1)) == 0;  // low 7 bits are the nights
}

bool ShiftPattern::pure_night() const {
    return (bits_ >> kDaysPerWeek) == 0;
}

std::string ShiftPattern::cover_string() const {
    std::string s(kSlotsPerWeek, '0');
    for (int slot = 1; slot <= kSlotsPerWeek; ++slot)
        if (covers(slot)) s[slot - 1] = '1';
    return s;
}

long long GradeTable::sum() const {
    long long total = 0;
    for (int c : cells_) total += c;
    return total;
}

std::vector<ShiftPattern> enumerate_patterns(int days, int nights) {
    if (days < 0 || days > kDaysPerWeek || nights < 0 || nights > kDaysPerWeek)
        fail("contract: day and night counts must lie in 0..7");
    if (days == 0 && nights == 0)
        fail("contract: day and night counts cannot both be zero");

    std::vector<ShiftPattern> result;
    // 7-bit masks with the requested popcount, placed in the day or night half.
    auto add_half = [&result](int count, bool day_half) {
        if (count == 0) return;
        for (unsigned m = 0; m < (1u << kDaysPerWeek); ++m) {
            if (std::popcount(m) != count) continue;
            const std::uint16_t bits =
                day_half ? static_cast<std::uint16_t>(m << kDaysPerWeek)
                         : static_cast<std::uint16_t>(m);
            result.push_back(ShiftPattern::from_bits(bits));
        }
    };
    add_half(days, true);
    add_half(nights, false);
    std::sort(result.begin(), result.end());
    return result;
}

void Instance::validate() const {
    if (num_grades < 1) fail("num_grades: must be >= 1");
    if (nurses.empty()) fail("nurses: at least one nurse required");
    if (demand.num_grades() != num_grades) fail("demand: grade count does not match num_grades");
    for (int k = 1; k <= kSlotsPerWeek; ++k)
        for (int s = 1; s <= num_grades; ++s)
            if (demand.at(k, s) < 0)
                fail("demand[" + std::to_string(k) + "][" + std::to_string(s) +
                     "]: must be non-negative");

    for (std::size_t i = 0; i < nurses.size(); ++i) {
        const NurseSpec& nurse = nurses[i];
        const std::string who = "nurse " + std::to_string(nurse.id);
        if (nurse.id != static_cast<int>(i) + 1)
            fail("nurses: ids must be exactly 1..n in order, found " + std::to_string(nurse.id) +
                 " at position " + std::to_string(i + 1));
        if (nurse.grade < 1 || nurse.grade > num_grades)
            fail(who + ": grade " + std::to_string(nurse.grade) + " outside 1.." +
                 std::to_string(num_grades));
        if (nurse.patterns.empty()) fail(who + ": patterns must be nonempty");
        for (std::size_t j = 0; j < nurse.patterns.size(); ++j) {
            const PatternOption& option = nurse.patterns[j];
            if (option.cost < 0 || option.cost > 100)
                fail(who + " pattern " + std::to_string(j + 1) + ": cost " +
                     std::to_string(option.cost) + " outside [0, 100]");
            if (j > 0 && !(nurse.patterns[j - 1].pattern < option.pattern))
                fail(who + ": duplicate or unsorted pattern cover " +
                     option.pattern.cover_string());
        }
    }
}

namespace {

int require_int(const ordered_json& j, const std::string& field) {
    if (!j.is_number_integer())
        fail(field + ": must be an integer");
    return j.get<int>();
}

Instance parse_instance(const ordered_json& root) {
    if (!root.is_object()) fail("instance: top level must be a JSON object");
    for (const char* field : {"num_grades", "demand", "nurses"})
        if (!root.contains(field)) fail(std::string(field) + ": missing");

    Instance instance;
    instance.num_grades = require_int(root.at("num_grades"), "num_grades");
    if (instance.num_grades < 1) fail("num_grades: must be >= 1");

    const auto& demand = root.at("demand");
    if (!demand.is_array() || demand.size() != kSlotsPerWeek)
        fail("demand: expected 14 rows");
    instance.demand = GradeTable(instance.num_grades);
    for (int k = 1; k <= kSlotsPerWeek; ++k) {
        const auto& row = demand[k - 1];
        if (!row.is_array() || static_cast<int>(row.size()) != instance.num_grades)
            fail("demand row " + std::to_string(k) + ": expected " +
                 std::to_string(instance.num_grades) + " entries");
        for (int s = 1; s <= instance.num_grades; ++s) {
            const int value = require_int(row[s - 1], "demand[" + std::to_string(k) + "][" +
                                                         std::to_string(s) + "]");
            if (value < 0)
                fail("demand[" + std::to_string(k) + "][" + std::to_string(s) +
                     "]: must be non-negative");
            instance.demand.at(k, s) = value;
        }
    }

    const auto& nurses = root.at("nurses");
    if (!nurses.is_array() || nurses.empty()) fail("nurses: expected a nonempty array");
    for (const auto& entry : nurses) {
        if (!entry.is_object()) fail("nurses: each entry must be an object");
        NurseSpec nurse;
        if (!entry.contains("id")) fail("nurse: id missing");
        nurse.id = require_int(entry.at("id"), "nurse id");
        const std::string who = "nurse " + std::to_string(nurse.id);
        if (!entry.contains("grade")) fail(who + ": grade missing");
        nurse.grade = require_int(entry.at("grade"), who + " grade");
        if (!entry.contains("patterns") || !entry.at("patterns").is_array() ||
            entry.at("patterns").empty())
            fail(who + ": patterns must be a nonempty array");
        for (const auto& p : entry.at("patterns")) {
            if (!p.is_object() || !p.contains("cover") || !p.contains("cost"))
                fail(who + ": each pattern needs cover and cost");
            if (!p.at("cover").is_string()) fail(who + ": cover must be a string");
            PatternOption option;
            try {
                option.pattern = ShiftPattern::from_cover_string(p.at("cover").get<std::string>());
            } catch (const std::exception& e) {
                fail(who + " " + e.what());
            }
            option.cost = require_int(p.at("cost"), who + " pattern cost");
            nurse.patterns.push_back(option);
        }
        std::sort(nurse.patterns.begin(), nurse.patterns.end(),
                  [](const PatternOption& a, const PatternOption& b) {
                      return a.pattern < b.pattern;
                  });
        instance.nurses.push_back(std::move(nurse));
    }
    std::sort(instance.nurses.begin(), instance.nurses.end(),
              [](const NurseSpec& a, const NurseSpec& b) { return a.id < b.id; });

    instance.validate();
    return instance;
}

}  // namespace

Instance load_instance(const std::string& bytes) {
    ordered_json root;
    try {
        root = ordered_json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("instance: invalid JSON: ") + e.what());
    }
    return parse_instance(root);
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("instance: cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_instance(buffer.str());
}

std::string save_instance(const Instance& instance) {
    instance.validate();
    ordered_json root;
    root["num_grades"] = instance.num_grades;
    ordered_json demand = ordered_json::array();
    for (int k = 1; k <= kSlotsPerWeek; ++k) {
        ordered_json row = ordered_json::array();
        for (int s = 1; s <= instance.num_grades; ++s) row.push_back(instance.demand.at(k, s));
        demand.push_back(std::move(row));
    }
    root["demand"] = std::move(demand);
    ordered_json nurses = ordered_json::array();
    for (const NurseSpec& nurse : instance.nurses) {
        ordered_json entry;
        entry["id"] = nurse.id;
        entry["grade"] = nurse.grade;
        ordered_json patterns = ordered_json::array();
        for (const PatternOption& option : nurse.patterns) {
            ordered_json p;
            p["cover"] = option.pattern.cover_string();
            p["cost"] = option.cost;
            patterns.push_back(std::move(p));
        }
        entry["patterns"] = std::move(patterns);
        nurses.push_back(std::move(entry));
    }
    root["nurses"] = std::move(nurses);
    return root.dump(2) + "\n";
}

void save_instance_file(const Instance& instance, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("instance: cannot write " + path);
    out << save_instance(instance);
}

std::string instance_hash(const Instance& instance) {
    const std::string bytes = save_instance(instance);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[i] = digits[h & 0xf];
        h >>= 4;
    }
    return hex;
}

}  // namespace rostering
