#include "mcran/config_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <string_view>
#include <vector>

namespace mcran {

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Entry {
    std::string value;
    std::size_t line = 0;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::map<std::string, Entry> read_entries(std::istream& in) {
    std::map<std::string, Entry> entries;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = raw;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) throw ConfigError(line, "expected 'key = value'");
        const std::string key(trim(text.substr(0, eq)));
        const std::string value(trim(text.substr(eq + 1)));
        if (key.empty()) throw ConfigError(line, "missing key");
        if (value.empty()) throw ConfigError(line, "missing value for '" + key + "'");
        if (entries.contains(key)) throw ConfigError(line, "duplicate key '" + key + "'");
        entries.emplace(key, Entry{value, line});
    }
    return entries;
}

template <typename T>
T parse_number(const std::string& key, const Entry& e) {
    T out{};
    const char* end = e.value.data() + e.value.size();
    auto [ptr, ec] = std::from_chars(e.value.data(), end, out);
    if (ec != std::errc() || ptr != end) throw ConfigError(e.line, "invalid value '" + e.value + "' for '" + key + "'");
    return out;
}

std::size_t parse_count(const std::string& key, const Entry& e) {
    const auto v = parse_number<std::uint64_t>(key, e);
    if (v == 0) throw ConfigError(e.line, "'" + key + "' must be positive");
    return static_cast<std::size_t>(v);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        items.emplace_back(trim(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return items;
}

using Handler = std::function<void(const std::string&, const Entry&)>;

std::map<std::string, Handler> network_handlers(NetworkConfig& c) {
    return {
        {"num_clouds", [&](auto& k, auto& e) { c.dims.clouds = parse_count(k, e); }},
        {"num_bs_per_cloud", [&](auto& k, auto& e) { c.dims.bs_per_cloud = parse_count(k, e); }},
        {"num_pz_per_bs", [&](auto& k, auto& e) { c.dims.pz_per_bs = parse_count(k, e); }},
        {"num_users", [&](auto& k, auto& e) { c.dims.users = parse_count(k, e); }},
        {"cell_distance", [&](auto& k, auto& e) { c.cell_distance = parse_number<double>(k, e); }},
        {"tx_psd_dbm_hz", [&](auto& k, auto& e) { c.tx_psd_dbm_hz = parse_number<double>(k, e); }},
        {"noise_psd_dbm_hz", [&](auto& k, auto& e) { c.noise_psd_dbm_hz = parse_number<double>(k, e); }},
        {"sinr_gap_db", [&](auto& k, auto& e) { c.sinr_gap_db = parse_number<double>(k, e); }},
        {"bandwidth_hz", [&](auto& k, auto& e) { c.bandwidth_hz = parse_number<double>(k, e); }},
        {"pathloss_exponent", [&](auto& k, auto& e) { c.pathloss_exponent = parse_number<double>(k, e); }},
        {"pathloss_ref_db", [&](auto& k, auto& e) { c.pathloss_ref_db = parse_number<double>(k, e); }},
        {"shadowing_sigma_db", [&](auto& k, auto& e) { c.shadowing_sigma_db = parse_number<double>(k, e); }},
        {"fading",
         [&](auto& k, auto& e) {
             const auto f = parse_fading(e.value);
             if (!f) throw ConfigError(e.line, "invalid value '" + e.value + "' for '" + k + "' (none|rayleigh)");
             c.fading = *f;
         }},
        {"rng_seed", [&](auto& k, auto& e) { c.rng_seed = parse_number<std::uint64_t>(k, e); }},
    };
}

void apply_entries(const std::map<std::string, Entry>& entries, const std::map<std::string, Handler>& handlers) {
    std::vector<std::pair<std::string, Entry>> in_file_order(entries.begin(), entries.end());
    std::sort(in_file_order.begin(), in_file_order.end(),
              [](const auto& a, const auto& b) { return a.second.line < b.second.line; });
    for (const auto& [key, entry] : in_file_order) {
        const auto it = handlers.find(key);
        if (it == handlers.end()) throw ConfigError(entry.line, "unknown key '" + key + "'");
        it->second(key, entry);
    }
    for (const char* required : {"num_clouds", "num_bs_per_cloud", "num_pz_per_bs", "num_users"})
        if (!entries.contains(required)) throw ConfigError(0, std::string("missing required key '") + required + "'");
}

// Runs a validate() member and turns its message into a ConfigError.
template <typename T>
void validated(const T& value) {
    try {
        value.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(0, e.what());
    }
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open '" + path + "'");
    return in;
}

}  // namespace

NetworkConfig parse_network_config(std::istream& in) {
    NetworkConfig config;
    apply_entries(read_entries(in), network_handlers(config));
    validated(config);
    return config;
}

SweepSpec parse_sweep_spec(std::istream& in) {
    SweepSpec spec;
    auto handlers = network_handlers(spec.base_config);
    handlers["sweep_parameter"] = [&](auto& k, auto& e) {
        const auto p = parse_sweep_parameter(e.value);
        if (!p) throw ConfigError(e.line, "invalid value '" + e.value + "' for '" + k + "' (U|Z|B|C)");
        spec.swept_parameter = *p;
    };
    handlers["sweep_values"] = [&](auto& k, auto& e) {
        spec.sweep_values.clear();
        for (const auto& item : split_list(e.value)) spec.sweep_values.push_back(parse_count(k, Entry{item, e.line}));
    };
    handlers["trials"] = [&](auto& k, auto& e) { spec.trials = parse_count(k, e); };
    handlers["modes"] = [&](auto& k, auto& e) {
        spec.modes.clear();
        for (const auto& item : split_list(e.value)) {
            const auto m = parse_mode(item);
            if (!m) throw ConfigError(e.line, "invalid mode '" + item + "' in '" + k + "' (hybrid|signal|sched)");
            spec.modes.push_back(*m);
        }
    };
    handlers["solver"] = [&](auto& k, auto& e) {
        const auto s = parse_solver(e.value);
        if (!s) throw ConfigError(e.line, "invalid value '" + e.value + "' for '" + k + "' (exact|greedy)");
        spec.solver = *s;
    };
    handlers["users_per_cloud"] = [&](auto& k, auto& e) {
        if (e.value != "true" && e.value != "false")
            throw ConfigError(e.line, "invalid value '" + e.value + "' for '" + k + "' (true|false)");
        spec.users_per_cloud = e.value == "true";
    };
    handlers["local_search_passes"] = [&](auto& k, auto& e) {
        spec.local_search_passes = parse_number<std::size_t>(k, e);
    };
    handlers["threads"] = [&](auto& k, auto& e) { spec.threads = parse_number<std::size_t>(k, e); };

    const auto entries = read_entries(in);
    apply_entries(entries, handlers);
    if (!entries.contains("sweep_parameter")) throw ConfigError(0, "missing required key 'sweep_parameter'");
    if (!entries.contains("sweep_values")) throw ConfigError(0, "missing required key 'sweep_values'");
    validated(spec);
    return spec;
}

NetworkConfig load_network_config(const std::string& path) {
    auto in = open(path);
    return parse_network_config(in);
}

SweepSpec load_sweep_spec(const std::string& path) {
    auto in = open(path);
    return parse_sweep_spec(in);
}

}  // namespace mcran
