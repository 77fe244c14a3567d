#include "simplexity/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace simplexity::io {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::runtime_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int require_int(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_number_integer())
        throw std::runtime_error(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string require_string(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_string())
        throw std::runtime_error(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

const Json& require_array(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_array())
        throw std::runtime_error(std::string("field \"") + key + "\" must be an array");
    return v;
}

Json rational_array(const std::vector<Rational>& values) {
    Json a = Json::array();
    for (const Rational& v : values) a.push_back(to_fraction_string(v));
    return a;
}

}  // namespace

Json simplex_to_json(const Simplex01& s) {
    Json j;
    j["n"] = s.dim();
    j["vertices"] = s.vertex_strings();
    return j;
}

Simplex01 simplex_from_json(const Json& j) {
    const int n = require_int(j, "n");
    std::vector<std::string> vertices;
    for (const Json& v : require_array(j, "vertices")) {
        if (!v.is_string()) throw std::runtime_error("vertex entries must be strings");
        vertices.push_back(v.get<std::string>());
    }
    return Simplex01::from_strings(n, vertices);
}

Json class_file_to_json(const EnumerationSummary& summary) {
    Json j;
    j["n"] = summary.n;
    Json classes = Json::array();
    for (const ConstraintClass& cls : summary.classes) {
        Json c;
        c["volume"] = to_fraction_string(cls.volume);
        c["folded"] = cls.folded;
        c["count"] = cls.count;
        c["witness"] = simplex_to_json(cls.witness);
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    j["rho"] = summary.rho;
    return j;
}

ClassFile class_file_from_json(const Json& j) {
    ClassFile file;
    file.n = require_int(j, "n");
    if (file.n < 1 || file.n > kMaxDim) throw std::runtime_error("dimension out of range");
    for (const Json& c : require_array(j, "classes")) {
        // invalid_argument from the rational/simplex parsers becomes the
        // loader's uniform runtime_error, message preserved
        try {
            ConstraintClass cls{Rational(0), {}, 0, simplex_from_json(require(c, "witness"))};
            cls.volume = rational_from_string(require_string(c, "volume"));
            if (cls.volume <= 0) throw std::runtime_error("class volume must be positive");
            for (const Json& d : require_array(c, "folded")) {
                if (!d.is_number_integer())
                    throw std::runtime_error("folded profile entries must be integers");
                cls.folded.push_back(d.get<int>());
            }
            const Json& count = require(c, "count");
            if (!count.is_number_unsigned() && !count.is_number_integer())
                throw std::runtime_error("field \"count\" must be an integer");
            cls.count = count.get<std::uint64_t>();
            if (cls.witness.dim() != file.n)
                throw std::runtime_error("witness dimension does not match the file");
            file.classes.push_back(std::move(cls));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(e.what());
        }
    }
    const Json& rho = require(j, "rho");
    if (!rho.is_number_integer() && !rho.is_number_unsigned())
        throw std::runtime_error("field \"rho\" must be an integer");
    file.rho = rho.get<std::int64_t>();
    return file;
}

ClassFile load_class_file(const std::string& path) {
    return class_file_from_json(load_json(path));
}

Json lp_result_to_json(int n, const LPSolution& sol,
                       const std::vector<ConstraintClass>& classes) {
    Json j;
    j["n"] = n;
    j["g_star"] = to_fraction_string(sol.g_star);
    j["bound"] = to_fraction_string(sol.bound);
    j["alpha"] = rational_array(sol.alpha_star.exact);
    Json tight = Json::array();
    for (std::size_t idx : sol.tight_classes) {
        const ConstraintClass& cls = classes.at(idx);
        Json key;
        key["volume"] = to_fraction_string(cls.volume);
        key["folded"] = cls.folded;
        tight.push_back(std::move(key));
    }
    j["tight_classes"] = std::move(tight);
    return j;
}

Json dissection_to_json(const Dissection& d) {
    Json j;
    j["n"] = d.n;
    j["polytope"] = "cube";
    j["axis"] = d.axis;
    Json simplices = Json::array();
    for (const Simplex01& s : d.simplices) simplices.push_back(s.vertex_strings());
    j["simplices"] = std::move(simplices);
    return j;
}

Dissection dissection_from_json(const Json& j) {
    const int n = require_int(j, "n");
    if (j.contains("polytope")) {
        if (!j.at("polytope").is_string() || j.at("polytope").get<std::string>() != "cube")
            throw std::runtime_error("only \"cube\" dissections are supported");
    }
    int axis = 1;
    if (j.contains("axis")) {
        if (!j.at("axis").is_number_integer())
            throw std::runtime_error("field \"axis\" must be an integer");
        axis = j.at("axis").get<int>();
    }
    std::vector<Simplex01> simplices;
    std::size_t index = 0;
    for (const Json& entry : require_array(j, "simplices")) {
        if (!entry.is_array()) throw std::runtime_error("simplices must be arrays of vertex strings");
        std::vector<std::string> vertices;
        for (const Json& v : entry) {
            if (!v.is_string()) throw std::runtime_error("vertex entries must be strings");
            vertices.push_back(v.get<std::string>());
        }
        try {
            simplices.push_back(Simplex01::from_strings(n, vertices));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("simplex " + std::to_string(index) + ": " + e.what());
        }
        ++index;
    }
    try {
        return make_dissection(n, axis, std::move(simplices));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

Dissection load_dissection(const std::string& path) {
    try {
        return dissection_from_json(load_json(path));
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["partition_ok"] = report.partition_ok;
    j["volume_sum"] = to_fraction_string(report.volume_sum);
    if (report.overlap) {
        Json w;
        w["first"] = report.overlap->first;
        w["second"] = report.overlap->second;
        w["point"] = rational_array(report.overlap->point);
        j["overlap"] = std::move(w);
    } else {
        j["overlap"] = nullptr;
    }
    Json volumes = Json::array();
    for (const ClassVolumeVector& cv : report.class_volumes) {
        Json entry;
        entry["axis"] = cv.axis;
        entry["V"] = rational_array(cv.V);
        volumes.push_back(std::move(entry));
    }
    j["class_volumes"] = std::move(volumes);
    j["class_volumes_ok"] = report.class_volumes_ok;
    Json prop;
    Json sums = Json::array();
    for (const std::vector<Rational>& row : report.proposition.sums)
        sums.push_back(rational_array(row));
    prop["sums"] = std::move(sums);
    prop["all_equal"] = report.proposition.all_equal;
    j["proposition"] = std::move(prop);
    j["proposition_ok"] = report.proposition_ok;
    return j;
}

std::string dumps(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::runtime_error("failed reading " + path);
    return std::move(buffer).str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + path);
}

Json load_json(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("failed to parse " + path + ": " + e.what());
    }
}

}  // namespace simplexity::io
