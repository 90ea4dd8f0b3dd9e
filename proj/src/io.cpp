#include "a1mod/io.hpp"

#include <fstream>
#include <sstream>

namespace a1mod {

namespace {

Json interval_json(Interval i)
{
    return Json{{"lo", i.lo}, {"hi", i.hi}};
}

Interval interval_from(const Json& j, const char* what)
{
    if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
        throw ParseError(std::string("missing or malformed ") + what);
    return {j.at("lo").get<int>(), j.at("hi").get<int>()};
}

// row i = image of source basis element i
Json matrix_json(const BitMatrix& m)
{
    Json rows = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) {
        Json row = Json::array();
        for (size_t r = 0; r < m.rows(); ++r)
            row.push_back(m.get(r, c) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

BitMatrix matrix_from(const Json& j, size_t target_dim, size_t source_dim)
{
    if (!j.is_array() || j.size() != source_dim)
        throw ParseError("action matrix has the wrong number of rows");
    BitMatrix m(target_dim, source_dim);
    for (size_t c = 0; c < source_dim; ++c) {
        const Json& row = j[c];
        if (!row.is_array() || row.size() != target_dim)
            throw ParseError("action matrix row has the wrong length");
        for (size_t r = 0; r < target_dim; ++r) {
            int v = row[r].get<int>();
            if (v != 0 && v != 1)
                throw ParseError("action matrix entries must be 0 or 1");
            if (v)
                m.set(r, c);
        }
    }
    return m;
}

std::vector<bool> generator_flags(const GradedModule& m, int d)
{
    size_t n = m.dim(d);
    Subspace im(n);
    for (size_t g = 0; g < m.num_gens(); ++g) {
        int from = d - m.gen_degree(g);
        if (!m.window().contains(from))
            continue;
        BitMatrix a = m.act(g, from);
        for (size_t c = 0; c < a.cols(); ++c)
            im.add(a.col(c));
    }
    std::vector<bool> out(n);
    for (size_t i = 0; i < n; ++i) {
        BitVector e(n);
        e.set(i);
        out[i] = !im.contains(e);
    }
    return out;
}

}  // namespace

Json module_to_json(const GradedModule& m, const Provenance& p)
{
    Json j;
    if (!p.empty()) {
        Json h = Json::object();
        for (auto& [k, v] : p)
            h[k] = v;
        j["provenance"] = h;
    }
    j["algebra"] = m.algebra().label;
    j["window"] = interval_json(m.window());
    j["trusted"] = interval_json(m.trusted());
    j["bounded_below"] = m.bounded_below();
    j["complete_top"] = m.complete_top();
    j["dims"] = m.dims();
    if (!m.labels().empty())
        j["labels"] = m.labels();
    Json actions = Json::object();
    for (size_t g = 0; g < m.num_gens(); ++g) {
        Json per = Json::array();
        for (int d = m.window().lo; d <= m.window().hi; ++d)
            per.push_back(matrix_json(m.act(g, d)));
        actions[m.algebra().gen_names[g]] = std::move(per);
    }
    j["actions"] = std::move(actions);
    return j;
}

ModuleFile module_from_json(const Json& j)
{
    try {
        ModuleFile f;
        if (j.contains("provenance"))
            for (auto& [k, v] : j.at("provenance").items())
                f.provenance[k] = v.get<std::string>();
        const Algebra& alg = Algebra::by_label(j.at("algebra").get<std::string>());
        Interval w = interval_from(j.at("window"), "window");
        auto dims = j.at("dims").get<std::vector<size_t>>();
        GradedModule m(alg, w, dims);
        m.set_trusted(interval_from(j.at("trusted"), "trusted"));
        m.set_bounded_below(j.value("bounded_below", true));
        m.set_complete_top(j.value("complete_top", false));
        if (j.contains("labels"))
            m.set_labels(j.at("labels").get<std::vector<std::vector<std::string>>>());
        const Json& acts = j.at("actions");
        for (size_t g = 0; g < alg.num_gens(); ++g) {
            const Json& per = acts.at(alg.gen_names[g]);
            if (!per.is_array() || per.size() != dims.size())
                throw ParseError("action list length does not match window");
            for (int d = w.lo; d <= w.hi; ++d)
                m.set_act(g, d, matrix_from(per[d - w.lo], m.dim(d + alg.gen_degrees[g]), m.dim(d)));
        }
        f.module = std::move(m);
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed module file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("malformed module file: ") + e.what());
    }
}

std::string write_module(const GradedModule& m, const Provenance& p)
{
    return module_to_json(m, p).dump(1) + "\n";
}

ModuleFile read_module(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("not JSON: ") + e.what());
    }
    return module_from_json(j);
}

ModuleFile read_module_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_module(ss.str());
}

std::string to_dot(const GradedModule& m, const std::string& name)
{
    std::ostringstream o;
    auto node = [](int d, size_t i) {
        return "\"" + std::to_string(d) + "_" + std::to_string(i) + "\"";
    };
    o << "digraph \"" << name << "\" {\n  rankdir=LR;\n  node [shape=circle, label=\"\", width=0.15];\n";
    for (int d = m.window().lo; d <= m.window().hi; ++d) {
        if (m.dim(d) == 0)
            continue;
        auto gen = generator_flags(m, d);
        o << "  { rank=same;";
        for (size_t i = 0; i < m.dim(d); ++i)
            o << " " << node(d, i) << (gen[i] ? " [style=solid]" : " [style=filled, fillcolor=black]") << ";";
        o << " }\n";
    }
    for (size_t g = 0; g < m.num_gens(); ++g)
        for (int d = m.window().lo; d <= m.window().hi; ++d) {
            const BitMatrix& a = m.act(g, d);
            for (size_t c = 0; c < a.cols(); ++c)
                for (size_t r = 0; r < a.rows(); ++r)
                    if (a.get(r, c)) {
                        o << "  " << node(d, c) << " -> " << node(d + m.gen_degree(g), r);
                        if (g == 1)
                            o << " [style=dashed, label=\"" << m.algebra().gen_names[g] << "\"]";
                        o << ";\n";
                    }
        }
    o << "}\n";
    return o.str();
}

std::string to_ascii(const GradedModule& m)
{
    std::ostringstream o;
    int lo = m.bottom(), hi = m.top();
    if (m.is_zero())
        return "0\n";
    size_t rows = 0;
    for (int d = lo; d <= hi; ++d)
        rows = std::max(rows, m.dim(d));
    o << "deg ";
    for (int d = lo; d <= hi; ++d) {
        std::string s = std::to_string(d);
        o << std::string(4 - std::min<size_t>(4, s.size()), ' ') << s;
    }
    o << "\n";
    std::vector<std::vector<bool>> gen;
    for (int d = lo; d <= hi; ++d)
        gen.push_back(generator_flags(m, d));
    for (size_t r = 0; r < rows; ++r) {
        o << "    ";
        for (int d = lo; d <= hi; ++d)
            o << "   " << (r < m.dim(d) ? (gen[d - lo][r] ? 'o' : '*') : ' ');
        o << "\n";
    }
    for (size_t g = 0; g < m.num_gens(); ++g) {
        o << m.algebra().gen_names[g] << ":";
        bool any = false;
        for (int d = lo; d <= hi; ++d) {
            const BitMatrix& a = m.act(g, d);
            for (size_t c = 0; c < a.cols(); ++c)
                for (size_t r = 0; r < a.rows(); ++r)
                    if (a.get(r, c)) {
                        o << " " << d << "." << c << "->" << d + m.gen_degree(g) << "." << r;
                        any = true;
                    }
        }
        if (!any)
            o << " none";
        o << "\n";
    }
    if (!m.complete_top())
        o << "(cut at " << m.window().hi << ", trusted " << m.trusted().lo << ".." << m.trusted().hi << ")\n";
    return o.str();
}

Json to_json(const MargolisHomology& h)
{
    Json dims = Json::array(), degs = Json::array();
    for (int d : h.trusted_degrees()) {
        degs.push_back(d);
        dims.push_back(h.dim(d));
    }
    return Json{{"k", h.k}, {"dims", dims}, {"degrees", degs}, {"trusted", interval_json(h.trusted)}};
}

Json to_json(const PicClass& c)
{
    Json j;
    j["algebra"] = Algebra::get(c.algebra).label;
    j["k"] = c.k;
    j["shift"] = c.shift;
    if (c.n)
        j["n"] = *c.n;
    Json inv = Json::object();
    auto put = [&](const char* k, const std::optional<int>& v) {
        if (v)
            inv[k] = *v;
    };
    put("d0", c.inv.d0);
    put("d1", c.inv.d1);
    put("c", c.inv.c);
    put("e", c.inv.e);
    put("f", c.inv.f);
    put("t1", c.inv.t1);
    j["invariants"] = inv;
    return j;
}

Json to_json(const TruncatedSeries& s)
{
    return Json{{"lo", s.lo}, {"cutoff", s.cutoff}, {"exact", s.exact}, {"coefficients", s.coef}};
}

Json to_json(const Resolution& r)
{
    Json stages = Json::array();
    for (auto& st : r.stages)
    {
        // exact in every degree when the base module is finite
        Json hi = st.trusted_hi >= (1 << 27) ? Json(nullptr) : Json(st.trusted_hi);
        stages.push_back(Json{{"s", st.s}, {"generator_degrees", st.generator_degrees}, {"trusted_hi", hi}});
    }
    return stages;
}

Json to_json(const SplitResult& s)
{
    return Json{{"free_generator_degrees", s.free_generator_degrees},
                {"free_trusted_hi", s.free_trusted_hi},
                {"reduced_dims", s.reduced->dims()},
                {"reduced_window", interval_json(s.reduced->window())}};
}

}  // namespace a1mod
