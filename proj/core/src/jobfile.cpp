#include "cutproject/jobfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cutproject {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            ok = ok || key == a;
        if (!ok)
            throw ParseError("unknown key \"" + key + "\" in " + where);
    }
}

json require(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key))
        throw ParseError("missing field \"" + std::string(key) + "\" in " + where);
    return j.at(key);
}

std::vector<int> default_subset(int N) {
    std::vector<int> all(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        all[static_cast<std::size_t>(i)] = i;
    return all;
}

WeightFunction window_from_json(const json& j, int m, int N) {
    if (!j.is_object())
        throw ParseError("window must be a JSON object");
    const std::string kind = require(j, "kind", "window").get<std::string>();
    if (kind == "box") {
        reject_unknown_keys(j, {"kind", "intervals", "cyclic_subset", "half_open"}, "window");
        std::vector<std::pair<double, double>> intervals;
        for (const auto& iv : require(j, "intervals", "box window")) {
            if (!iv.is_array() || iv.size() != 2)
                throw ParseError("field \"intervals\" entries must be [a, b] pairs");
            intervals.emplace_back(iv[0].get<double>(), iv[1].get<double>());
        }
        if (static_cast<int>(intervals.size()) != m)
            throw ParseError("field \"intervals\" has " + std::to_string(intervals.size()) +
                             " axes, scheme internal dimension is " + std::to_string(m));
        std::vector<int> subset = j.contains("cyclic_subset")
                                      ? j.at("cyclic_subset").get<std::vector<int>>()
                                      : default_subset(N);
        const bool half_open = j.value("half_open", false);
        return WeightFunction::box(intervals, N, subset, half_open);
    }
    if (kind == "tent") {
        reject_unknown_keys(j, {"kind", "halfwidths", "cyclic_subset"}, "window");
        auto widths = require(j, "halfwidths", "tent window").get<std::vector<double>>();
        if (static_cast<int>(widths.size()) != m)
            throw ParseError("field \"halfwidths\" has " + std::to_string(widths.size()) +
                             " axes, scheme internal dimension is " + std::to_string(m));
        std::vector<int> subset = j.contains("cyclic_subset")
                                      ? j.at("cyclic_subset").get<std::vector<int>>()
                                      : default_subset(N);
        return WeightFunction::tent(widths, N, subset);
    }
    if (kind == "combination") {
        reject_unknown_keys(j, {"kind", "terms"}, "window");
        std::vector<std::pair<Complex, WeightFunction>> parts;
        for (const auto& term : require(j, "terms", "combination window")) {
            reject_unknown_keys(term, {"coefficient", "window"}, "combination term");
            Complex coeff{1.0, 0.0};
            if (term.contains("coefficient")) {
                const auto& c = term.at("coefficient");
                if (c.is_number())
                    coeff = Complex{c.get<double>(), 0.0};
                else if (c.is_array() && c.size() == 2)
                    coeff = Complex{c[0].get<double>(), c[1].get<double>()};
                else
                    throw ParseError("field \"coefficient\" must be a number or [re, im]");
            }
            parts.emplace_back(coeff, window_from_json(require(term, "window", "term"), m, N));
        }
        return WeightFunction::combination(parts);
    }
    throw ParseError("unknown window kind \"" + kind + "\"");
}

} // namespace

SchemeFile parse_scheme_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("scheme file must contain a JSON object");
    reject_unknown_keys(j, {"name", "d", "m", "N", "M", "c", "window"}, "scheme file");

    const int d = require(j, "d", "scheme file").get<int>();
    const int m = require(j, "m", "scheme file").get<int>();
    const int N = require(j, "N", "scheme file").get<int>();
    const int dm = d + m;

    const json jm = require(j, "M", "scheme file");
    if (!jm.is_array() || static_cast<int>(jm.size()) != dm)
        throw ParseError("field \"M\" must be an array of " + std::to_string(dm) + " rows");
    Eigen::MatrixXd M(dm, dm);
    for (int r = 0; r < dm; ++r) {
        const auto& row = jm[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != dm)
            throw ParseError("field \"M\" row " + std::to_string(r) + " must have " +
                             std::to_string(dm) + " entries");
        for (int c = 0; c < dm; ++c)
            M(r, c) = row[static_cast<std::size_t>(c)].get<double>();
    }

    const auto jc = require(j, "c", "scheme file").get<std::vector<int>>();
    if (static_cast<int>(jc.size()) != dm)
        throw ParseError("field \"c\" must have length " + std::to_string(dm));
    Eigen::VectorXi c(dm);
    for (int i = 0; i < dm; ++i)
        c[i] = jc[static_cast<std::size_t>(i)];

    const std::string name = j.value("name", std::string{});

    SchemeFile out{CutProjectScheme(d, m, N, std::move(M), std::move(c), name), {}};
    if (j.contains("window"))
        out.window = window_from_json(j.at("window"), m, N);
    return out;
}

SchemeFile parse_scheme_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open scheme file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_scheme_json(buffer.str());
    } catch (ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string emit_scheme_json(const CutProjectScheme& scheme) {
    json j;
    j["name"] = scheme.name();
    j["d"] = scheme.physical_dim();
    j["m"] = scheme.internal_dim();
    j["N"] = scheme.cyclic_order();
    json rows = json::array();
    for (int r = 0; r < scheme.embedding_dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < scheme.embedding_dim(); ++c)
            row.push_back(scheme.generator()(r, c));
        rows.push_back(std::move(row));
    }
    j["M"] = std::move(rows);
    std::vector<int> c(static_cast<std::size_t>(scheme.embedding_dim()));
    for (int i = 0; i < scheme.embedding_dim(); ++i)
        c[static_cast<std::size_t>(i)] = scheme.cyclic_coupling()[i];
    j["c"] = c;
    return j.dump(2) + "\n";
}

WeightFunction parse_window_json(const std::string& text, int m, int cyclic_order) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid window JSON: ") + e.what());
    }
    return window_from_json(j, m, cyclic_order);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string& s, const std::string& where) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size())
            throw ParseError("");
        return v;
    } catch (...) {
        throw ParseError("cannot parse number \"" + s + "\" in " + where);
    }
}

} // namespace

WeightFunction parse_window_spec(const std::string& spec, int m, int cyclic_order,
                                 bool half_open) {
    std::vector<std::pair<double, double>> intervals;
    std::vector<double> halfwidths;
    std::optional<std::vector<int>> subset;
    bool saw_box = false, saw_tent = false;

    for (const std::string& part : split(spec, '*')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos)
            throw ParseError("window part \"" + part + "\" lacks a kind prefix");
        const std::string kind = part.substr(0, colon);
        const std::string payload = part.substr(colon + 1);
        if (kind == "box") {
            saw_box = true;
            for (const std::string& axis : split(payload, ';')) {
                const auto nums = split(axis, ',');
                if (nums.size() != 2)
                    throw ParseError("box axis \"" + axis + "\" must be a,b");
                intervals.emplace_back(parse_number(nums[0], "box spec"),
                                       parse_number(nums[1], "box spec"));
            }
        } else if (kind == "tent") {
            saw_tent = true;
            for (const std::string& axis : split(payload, ';'))
                halfwidths.push_back(parse_number(axis, "tent spec"));
        } else if (kind == "cyclic") {
            if (payload.size() < 2 || payload.front() != '{' || payload.back() != '}')
                throw ParseError("cyclic spec must look like cyclic:{0,1}");
            std::vector<int> s;
            const std::string inner = payload.substr(1, payload.size() - 2);
            if (!inner.empty())
                for (const std::string& v : split(inner, ','))
                    s.push_back(static_cast<int>(parse_number(v, "cyclic spec")));
            subset = std::move(s);
        } else {
            throw ParseError("unknown window kind \"" + kind + "\"");
        }
    }
    if (saw_box && saw_tent)
        throw ParseError("cannot mix box and tent axes in one inline window; use a JSON window");

    const std::vector<int> cyc = subset.value_or(
        [&] {
            std::vector<int> all(static_cast<std::size_t>(cyclic_order));
            for (int i = 0; i < cyclic_order; ++i)
                all[static_cast<std::size_t>(i)] = i;
            return all;
        }());

    if (saw_tent) {
        if (static_cast<int>(halfwidths.size()) != m)
            throw ParseError("tent spec has " + std::to_string(halfwidths.size()) +
                             " axes, scheme internal dimension is " + std::to_string(m));
        return WeightFunction::tent(halfwidths, cyclic_order, cyc);
    }
    if (static_cast<int>(intervals.size()) != m)
        throw ParseError("box spec has " + std::to_string(intervals.size()) +
                         " axes, scheme internal dimension is " + std::to_string(m));
    return WeightFunction::box(intervals, cyclic_order, cyc, half_open);
}

} // namespace cutproject
