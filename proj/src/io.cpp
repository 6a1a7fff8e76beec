#include "mlnet/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mlnet {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool skippable(const std::string& line) {
    std::string t = trim(line);
    return t.empty() || t[0] == '#';
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return fields;
}

}  // namespace

MultilayerNetwork parse_edge_list(std::istream& edges, std::istream* actors,
                                  std::size_t layer_cap) {
    MultilayerNetwork net(layer_cap);

    if (actors) {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(*actors, line)) {
            ++lineno;
            if (skippable(line)) continue;
            std::string label = trim(line);
            if (label.find(',') != std::string::npos || label.find('\t') != std::string::npos)
                throw Error(errc::parse, "actors line " + std::to_string(lineno) +
                                             ": separator character inside label");
            net.add_actor(label);
        }
    }

    std::string line;
    std::size_t lineno = 0;
    std::optional<char> sep;
    while (std::getline(edges, line)) {
        ++lineno;
        if (skippable(line)) continue;
        if (!sep) sep = line.find('\t') != std::string::npos ? '\t' : ',';
        auto fields = split(line, *sep);
        if (fields.size() != 3 || fields[0].empty() || fields[1].empty() || fields[2].empty())
            throw Error(errc::parse,
                        "edges line " + std::to_string(lineno) +
                            ": expected actorA" + (*sep == '\t' ? "<tab>" : ",") + "actorB" +
                            (*sep == '\t' ? "<tab>" : ",") + "layer");
        try {
            ActorId u = net.add_actor(fields[0]);
            ActorId v = net.add_actor(fields[1]);
            LayerId l = net.add_layer(fields[2]);
            net.add_edge(l, u, v);
        } catch (const Error& e) {
            throw Error(e.code(), "edges line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return net;
}

MultilayerNetwork load_network(const std::filesystem::path& edges_path,
                               const std::optional<std::filesystem::path>& actors_path,
                               std::size_t layer_cap) {
    std::ifstream edges(edges_path);
    if (!edges)
        throw Error(errc::parse, "cannot open edges file " + edges_path.string());
    std::optional<std::ifstream> actors;
    if (actors_path) {
        actors.emplace(*actors_path);
        if (!*actors)
            throw Error(errc::parse, "cannot open actors file " + actors_path->string());
    }
    return parse_edge_list(edges, actors ? &*actors : nullptr, layer_cap);
}

void write_edge_list(const MultilayerNetwork& net, std::ostream& out) {
    for (LayerId l = 0; l < net.layer_count(); ++l)
        for (ActorId u = 0; u < net.actor_count(); ++u)
            for (ActorId v : net.neighbors(l, u))
                if (u < v)
                    out << net.actor_label(u) << ',' << net.actor_label(v) << ','
                        << net.layer_name(l) << '\n';
}

void write_actor_list(const MultilayerNetwork& net, std::ostream& out) {
    for (ActorId a = 0; a < net.actor_count(); ++a) out << net.actor_label(a) << '\n';
}

Cell Cell::str(std::string s) {
    Cell c;
    c.kind = Kind::text;
    c.text = std::move(s);
    return c;
}

Cell Cell::num(std::int64_t v) {
    Cell c;
    c.kind = Kind::integer;
    c.integer = v;
    return c;
}

Cell Cell::rat(Ratio r) {
    Cell c;
    c.kind = Kind::ratio;
    c.ratio = r;
    return c;
}

Cell Cell::dbl(double v) {
    Cell c;
    c.kind = Kind::real;
    c.real = v;
    return c;
}

Cell Cell::none() { return Cell{}; }

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

std::string format_real(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string cell_csv(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::text: return csv_escape(c.text);
        case Cell::Kind::integer: return std::to_string(c.integer);
        case Cell::Kind::ratio: return c.ratio.str2();
        case Cell::Kind::real: return format_real(c.real);
        case Cell::Kind::null: return "";
    }
    return "";
}

}  // namespace

void write_csv(const ReportTable& table, std::ostream& out) {
    for (const auto& comment : table.comments) out << "# " << comment << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << csv_escape(table.columns[i]);
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << cell_csv(row[i]);
        out << '\n';
    }
}

void write_json(const ReportTable& table, std::ostream& out) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const Cell& c = row[i];
            switch (c.kind) {
                case Cell::Kind::text: obj[table.columns[i]] = c.text; break;
                case Cell::Kind::integer: obj[table.columns[i]] = c.integer; break;
                case Cell::Kind::ratio: obj[table.columns[i]] = c.ratio.value(); break;
                case Cell::Kind::real: obj[table.columns[i]] = c.real; break;
                case Cell::Kind::null: obj[table.columns[i]] = nullptr; break;
            }
        }
        rows.push_back(std::move(obj));
    }
    out << rows.dump(2) << '\n';
}

bool initials_unique(const MultilayerNetwork& net) {
    std::vector<char> seen;
    for (LayerId l = 0; l < net.layer_count(); ++l) {
        char c = static_cast<char>(
            std::toupper(static_cast<unsigned char>(net.layer_name(l)[0])));
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) return false;
        seen.push_back(c);
    }
    return true;
}

std::string combination_label(const MultilayerNetwork& net, const LayerSet& combo) {
    const bool initials = initials_unique(net);
    std::string label;
    for (LayerId l : combo.to_vector()) {
        if (initials) {
            label += static_cast<char>(
                std::toupper(static_cast<unsigned char>(net.layer_name(l)[0])));
        } else {
            if (!label.empty()) label += '+';
            label += net.layer_name(l);
        }
    }
    return label;
}

}  // namespace mlnet
