#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hampack/model.hpp"

namespace hampack {

namespace {

// In-model variables, ascending rank. Pinned variables take part only in the
// zero-fixed model; the reduced and pair models dropped them.
struct EmitView {
    std::vector<WordIndex> vars;                     // ascending rank
    std::vector<std::pair<int, int>> conflict_pairs; // free-index pairs, i < j

    explicit EmitView(const PackingModel& m) {
        if (m.fixed_vars_in_model) {
            vars = m.free_words;
            vars.insert(vars.end(), m.fixed_one.begin(), m.fixed_one.end());
            vars.insert(vars.end(), m.fixed_zero.begin(), m.fixed_zero.end());
            std::sort(vars.begin(), vars.end());
        } else {
            vars = m.free_words;
        }
        for (std::size_t i = 0; i < m.conflicts.size(); ++i)
            m.conflicts[i].for_each([&](int j) {
                if (std::size_t(j) > i) conflict_pairs.emplace_back(int(i), j);
            });
    }
};

std::string var_name(const MixedSpace& space, WordIndex w) {
    return "x_" + space.format_word(w);
}

void header_comments(const PackingModel& m, const EmitView& view, std::ostream& out,
                     const char* prefix) {
    out << prefix << " packing model: " << to_string(m.kind) << "\n";
    out << prefix << " space: " << m.space.spec_string() << "  d: " << m.d << "\n";
    if (m.forbidden_profile)
        out << prefix << " forbidden contact profile: "
            << format_profile(m.space, *m.forbidden_profile) << "\n";
    out << prefix << " variables: " << view.vars.size()
        << "  conflict rows: " << view.conflict_pairs.size() << "\n";
    if (!m.fixed_vars_in_model && m.objective_offset() > 0)
        out << prefix << " objective offset (eliminated fixed-one words): "
            << m.objective_offset() << "\n";
}

void emit_lp(const PackingModel& m, std::ostream& out) {
    EmitView view(m);
    header_comments(m, view, out, "\\");
    out << "Maximize\n";
    if (view.vars.empty()) {
        out << " obj: 0\n";
    } else {
        out << " obj:";
        int on_line = 0;
        for (std::size_t i = 0; i < view.vars.size(); ++i) {
            if (on_line == 8) {
                out << "\n     ";
                on_line = 0;
            }
            out << (i == 0 ? " " : " + ") << var_name(m.space, view.vars[i]);
            ++on_line;
        }
        out << "\n";
    }
    bool has_rows = !view.conflict_pairs.empty() ||
                    (m.fixed_vars_in_model &&
                     (!m.fixed_one.empty() || !m.fixed_zero.empty()));
    if (has_rows) {
        out << "Subject To\n";
        std::size_t row = 0;
        for (auto [i, j] : view.conflict_pairs)
            out << " c" << ++row << ": " << var_name(m.space, m.free_words[std::size_t(i)])
                << " + " << var_name(m.space, m.free_words[std::size_t(j)]) << " <= 1\n";
        if (m.fixed_vars_in_model) {
            std::size_t pin = 0;
            for (WordIndex w : m.fixed_one)
                out << " p" << ++pin << ": " << var_name(m.space, w) << " = 1\n";
            std::size_t zero = 0;
            for (WordIndex w : m.fixed_zero)
                out << " z" << ++zero << ": " << var_name(m.space, w) << " = 0\n";
        }
    }
    if (!view.vars.empty()) {
        out << "Binary\n";
        for (WordIndex w : view.vars) out << " " << var_name(m.space, w) << "\n";
    }
    out << "End\n";
}

void emit_mps(const PackingModel& m, std::ostream& out) {
    EmitView view(m);
    header_comments(m, view, out, "*");

    auto field = [](const std::string& s) {
        std::string t = s;
        if (t.size() < 10) t.resize(10, ' ');
        return t;
    };

    out << "NAME          PACKING\n";
    out << "OBJSENSE\n    MAXIMIZE\n";
    out << "ROWS\n";
    out << " N  OBJ\n";
    for (std::size_t r = 0; r < view.conflict_pairs.size(); ++r)
        out << " L  c" << r + 1 << "\n";
    if (m.fixed_vars_in_model) {
        for (std::size_t r = 0; r < m.fixed_one.size(); ++r) out << " E  p" << r + 1 << "\n";
        for (std::size_t r = 0; r < m.fixed_zero.size(); ++r) out << " E  z" << r + 1 << "\n";
    }

    // row memberships per variable
    std::map<WordIndex, std::vector<std::string>> rows_of;
    for (std::size_t r = 0; r < view.conflict_pairs.size(); ++r) {
        auto [i, j] = view.conflict_pairs[r];
        rows_of[m.free_words[std::size_t(i)]].push_back("c" + std::to_string(r + 1));
        rows_of[m.free_words[std::size_t(j)]].push_back("c" + std::to_string(r + 1));
    }
    if (m.fixed_vars_in_model) {
        for (std::size_t r = 0; r < m.fixed_one.size(); ++r)
            rows_of[m.fixed_one[r]].push_back("p" + std::to_string(r + 1));
        for (std::size_t r = 0; r < m.fixed_zero.size(); ++r)
            rows_of[m.fixed_zero[r]].push_back("z" + std::to_string(r + 1));
    }

    out << "COLUMNS\n";
    if (!view.vars.empty()) {
        out << "    MARKER                 'MARKER'                 'INTORG'\n";
        for (WordIndex w : view.vars) {
            std::string name = var_name(m.space, w);
            out << "    " << field(name) << "  " << field("OBJ") << "  1\n";
            for (const std::string& row : rows_of[w])
                out << "    " << field(name) << "  " << field(row) << "  1\n";
        }
        out << "    MARKER                 'MARKER'                 'INTEND'\n";
    }

    out << "RHS\n";
    for (std::size_t r = 0; r < view.conflict_pairs.size(); ++r)
        out << "    " << field("RHS") << "  " << field("c" + std::to_string(r + 1))
            << "  1\n";
    if (m.fixed_vars_in_model)
        for (std::size_t r = 0; r < m.fixed_one.size(); ++r)
            out << "    " << field("RHS") << "  " << field("p" + std::to_string(r + 1))
                << "  1\n";

    out << "BOUNDS\n";
    for (WordIndex w : view.vars) {
        const char* type = "UP";
        const char* value = "  1";
        if (m.fixed_vars_in_model) {
            if (std::binary_search(m.fixed_one.begin(), m.fixed_one.end(), w)) {
                type = "FX";
            } else if (std::binary_search(m.fixed_zero.begin(), m.fixed_zero.end(), w)) {
                type = "FX";
                value = "  0";
            }
        }
        out << " " << type << " " << field("BND") << "  " << field(var_name(m.space, w))
            << value << "\n";
    }
    out << "ENDATA\n";
}

} // namespace

std::size_t emit(const PackingModel& m, EmitFormat format, std::ostream& out) {
    std::ostringstream ss;
    if (format == EmitFormat::lp)
        emit_lp(m, ss);
    else
        emit_mps(m, ss);
    std::string text = ss.str();
    out.write(text.data(), std::streamsize(text.size()));
    return text.size();
}

std::size_t emit_file(const PackingModel& m, EmitFormat format,
                      const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write model file " + path.string());
    std::size_t bytes = emit(m, format, out);
    if (!out) throw std::runtime_error("write error on " + path.string());
    return bytes;
}

std::vector<WordIndex> parse_solution_text(const MixedSpace& space, std::istream& in) {
    std::vector<WordIndex> chosen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t at = line.find("x_");
        if (at == std::string::npos) continue;
        std::size_t end = at + 2;
        while (end < line.size() && std::isdigit(static_cast<unsigned char>(line[end])))
            ++end;
        std::string digits = line.substr(at + 2, end - at - 2);
        std::size_t vp = line.find_first_not_of(" \t=", end);
        if (vp == std::string::npos)
            throw std::invalid_argument("solution line " + std::to_string(lineno) +
                                        ": missing value after variable name");
        double value = 0;
        try {
            value = std::stod(line.substr(vp));
        } catch (const std::exception&) {
            throw std::invalid_argument("solution line " + std::to_string(lineno) +
                                        ": bad value '" + line.substr(vp) + "'");
        }
        if (value > 0.5) chosen.push_back(space.parse_word(digits));
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    return chosen;
}

} // namespace hampack
