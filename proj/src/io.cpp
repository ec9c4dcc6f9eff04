#include "concord/io.hpp"

#include "concord/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace concord {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

bool is_integer_token(const std::string& s) {
    if (s.empty())
        return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Int parse_int_token(const std::string& s, long line) {
    std::string t = trim(s);
    if (!is_integer_token(t))
        throw ParseError(line, "expected an integer, got '" + s + "'");
    return Int(t);
}

// physical content lines with their 1-based numbers; comments and blanks dropped
std::vector<std::pair<long, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<long, std::string>> out;
    std::istringstream is(text);
    std::string line;
    long num = 0;
    while (std::getline(is, line)) {
        ++num;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty())
            out.emplace_back(num, line);
    }
    return out;
}

std::string factorization_string(const std::vector<PrimePower>& fac) {
    if (fac.empty())
        return "1";
    std::ostringstream os;
    for (size_t i = 0; i < fac.size(); ++i) {
        if (i)
            os << " * ";
        os << fac[i].prime.get_str();
        if (fac[i].exponent > 1)
            os << "^" << fac[i].exponent;
    }
    return os.str();
}

json json_int(const Int& v) {
    if (v.fits_slong_p())
        return json(v.get_si());
    return json(v.get_str());
}

Int int_from_json(const json& v, const std::string& field) {
    if (v.is_number_integer())
        return Int(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (!is_integer_token(s))
            throw CertificateVerificationFailed("field '" + field + "' is not an integer");
        return Int(s);
    }
    throw CertificateVerificationFailed("field '" + field + "' is not an integer");
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["kind"] = v.is_infinite_order() ? "InfiniteOrder" : "Inconclusive";
    if (v.is_infinite_order())
        j["witness"] = json_int(v.witness);
    json fac = json::array();
    for (const PrimePower& f : v.factorization)
        fac.push_back({{"prime", json_int(f.prime)}, {"exponent", f.exponent}});
    j["factorization"] = fac;
    return j;
}

json coeffs_to_json(const std::vector<Int>& coeffs) {
    json arr = json::array();
    for (const Int& c : coeffs)
        arr.push_back(json_int(c));
    return arr;
}

} // namespace

SeifertMatrix parse_seifert_file(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(1, "empty Seifert matrix file");
    Int dim_val = parse_int_token(lines[0].second, lines[0].first);
    if (dim_val < 0 || dim_val > 1000)
        throw ParseError(lines[0].first, "unreasonable matrix size " + dim_val.get_str());
    int dim = static_cast<int>(dim_val.get_si());
    if (static_cast<int>(lines.size()) - 1 < dim) {
        long after = lines.empty() ? 1 : lines.back().first + 1;
        throw ParseError(after, "expected " + std::to_string(dim) + " matrix rows, found " +
                                    std::to_string(lines.size() - 1));
    }
    if (static_cast<int>(lines.size()) - 1 > dim)
        throw ParseError(lines[static_cast<size_t>(dim) + 1].first,
                         "unexpected content after the matrix");
    IntMat m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const auto& [num, row] = lines[static_cast<size_t>(i) + 1];
        std::istringstream rs(row);
        std::string tok;
        int j = 0;
        while (rs >> tok) {
            if (j >= dim)
                throw ParseError(num, "row has more than " + std::to_string(dim) + " entries");
            m.at(i, j++) = parse_int_token(tok, num);
        }
        if (j != dim)
            throw ParseError(num, "row has " + std::to_string(j) + " entries, expected " +
                                      std::to_string(dim));
    }
    return SeifertMatrix(std::move(m));
}

std::string emit_seifert_file(const SeifertMatrix& V) {
    std::ostringstream os;
    os << V.dim() << '\n';
    for (int i = 0; i < V.dim(); ++i) {
        for (int j = 0; j < V.dim(); ++j) {
            if (j)
                os << ' ';
            os << V.matrix().at(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

IntPolynomial parse_coefficient_list(const std::string& text) {
    std::vector<std::string> parts = split(trim(text), ';');
    std::vector<Int> coeffs;
    for (const std::string& part : parts) {
        std::string t = trim(part);
        if (!is_integer_token(t))
            throw Error("bad coefficient '" + part + "'");
        coeffs.emplace_back(t);
    }
    return IntPolynomial(std::move(coeffs));
}

std::string emit_coefficient_list(const IntPolynomial& poly) {
    std::ostringstream os;
    const auto& c = poly.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (i)
            os << ';';
        os << c[i].get_str();
    }
    return c.empty() ? "0" : os.str();
}

std::vector<KnotRecord> parse_knot_table(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(1, "empty knot table");
    if (trim(lines[0].second) != "name,crossings,alexander,determinant")
        throw ParseError(lines[0].first,
                         "expected header 'name,crossings,alexander,determinant'");
    std::vector<KnotRecord> records;
    for (size_t li = 1; li < lines.size(); ++li) {
        const auto& [num, line] = lines[li];
        std::vector<std::string> fields = split(line, ',');
        if (fields.size() != 4)
            throw ParseError(num, "expected 4 comma-separated fields, got " +
                                      std::to_string(fields.size()));
        KnotRecord rec;
        rec.name = trim(fields[0]);
        if (rec.name.empty())
            throw ParseError(num, "empty knot name");
        Int crossings = parse_int_token(fields[1], num);
        if (crossings < 1 || crossings > 1000)
            throw ParseError(num, "bad crossing number " + crossings.get_str());
        rec.crossings = static_cast<int>(crossings.get_si());

        std::vector<std::string> parts = split(trim(fields[2]), ';');
        std::vector<Int> coeffs;
        for (const std::string& part : parts) {
            std::string t = trim(part);
            if (!is_integer_token(t))
                throw ParseError(num, "bad polynomial coefficient '" + part + "'");
            coeffs.emplace_back(t);
        }
        if (coeffs.empty())
            throw ParseError(num, "empty coefficient list");
        // coefficients must already be in normal form
        if (coeffs.front() == 0 || coeffs.back() <= 0)
            throw InconsistentRecord(num, "coefficient list is not normalized");
        rec.alexander = IntPolynomial(coeffs);
        if (rec.alexander.coeffs() != coeffs)
            throw InconsistentRecord(num, "coefficient list is not normalized");
        if (!rec.alexander.palindromic_up_to_sign())
            throw InconsistentRecord(num, "coefficients are not palindromic up to sign");
        Int at_one = rec.alexander.evaluate(1);
        if (at_one != 1 && at_one != -1)
            throw InconsistentRecord(num, "polynomial value at 1 must be +-1, got " +
                                              at_one.get_str());

        rec.determinant = parse_int_token(fields[3], num);
        if (rec.determinant < 1)
            throw InconsistentRecord(num, "determinant must be positive");
        if (rec.determinant % 2 == 0)
            throw InconsistentRecord(num, "knot determinants are odd");
        if (abs(rec.alexander.evaluate(-1)) != rec.determinant)
            throw InconsistentRecord(num, "determinant does not match |Delta(-1)|");
        records.push_back(std::move(rec));
    }
    return records;
}

std::string emit_knot_table(const std::vector<KnotRecord>& records) {
    std::ostringstream os;
    os << "name,crossings,alexander,determinant\n";
    for (const KnotRecord& r : records)
        os << r.name << ',' << r.crossings << ',' << emit_coefficient_list(r.alexander) << ','
           << r.determinant.get_str() << '\n';
    return os.str();
}

// --- certificates -----------------------------------------------------------

namespace {

json certificate_to_json_obj(const MetabolizerCertificate& cert) {
    json j;
    j["prime"] = cert.p;
    j["copies"] = cert.d;
    j["self_linking_unit"] = cert.c;
    j["generator"] = DlogTable::build(cert.p).g();
    j["permutation"] = cert.permutation;
    json basis = json::array();
    for (const ModVector& row : cert.basis)
        basis.push_back(row);
    j["basis"] = basis;
    j["summed_vector"] = cert.summed;
    j["relation_coeffs"] = coeffs_to_json(cert.relation.coeffs());
    j["cofactor_coeffs"] = coeffs_to_json(cert.cofactor.coeffs());
    j["integer_n"] = json_int(cert.n);
    j["verdict"] = "certified";
    return j;
}

} // namespace

std::string certificate_to_json(const MetabolizerCertificate& cert) {
    return certificate_to_json_obj(cert).dump(2) + "\n";
}

std::string certificates_to_json(const CertifyResult& result) {
    json j;
    j["verdict"] = result.verdict == CertifyVerdict::AllCertified ? "AllCertified"
                                                                  : "NoMetabolizerPossible";
    json certs = json::array();
    for (const MetabolizerCertificate& c : result.certificates)
        certs.push_back(certificate_to_json_obj(c));
    j["certificates"] = certs;
    return j.dump(2) + "\n";
}

MetabolizerCertificate certificate_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw CertificateVerificationFailed(std::string("bad JSON: ") + e.what());
    }
    auto need = [&](const char* key) -> const json& {
        if (!j.contains(key))
            throw CertificateVerificationFailed(std::string("missing field '") + key + "'");
        return j.at(key);
    };
    MetabolizerCertificate cert;
    cert.p = to_long(int_from_json(need("prime"), "prime"));
    cert.d = static_cast<int>(to_long(int_from_json(need("copies"), "copies")));
    cert.c = j.contains("self_linking_unit")
                 ? to_long(int_from_json(j.at("self_linking_unit"), "self_linking_unit"))
                 : 1;
    if (cert.p < 3 || !is_prime(Int(cert.p)))
        throw CertificateVerificationFailed("prime field is not an odd prime");
    if (cert.d < 2 || cert.d % 2 != 0)
        throw CertificateVerificationFailed("copies field must be even and positive");

    DlogTable table = DlogTable::build(cert.p);
    long stated_g = to_long(int_from_json(need("generator"), "generator"));
    if (stated_g != table.g())
        throw CertificateVerificationFailed("generator is not the smallest primitive root mod " +
                                            std::to_string(cert.p));

    const json& perm = need("permutation");
    if (!perm.is_array() || static_cast<int>(perm.size()) != cert.d)
        throw CertificateVerificationFailed("permutation must list every coordinate");
    std::vector<bool> seen(static_cast<size_t>(cert.d), false);
    for (const json& v : perm) {
        long idx = to_long(int_from_json(v, "permutation"));
        if (idx < 0 || idx >= cert.d || seen[static_cast<size_t>(idx)])
            throw CertificateVerificationFailed("permutation is not a permutation");
        seen[static_cast<size_t>(idx)] = true;
        cert.permutation.push_back(static_cast<int>(idx));
    }

    const json& basis = need("basis");
    if (!basis.is_array() || basis.size() != static_cast<size_t>(cert.d) / 2)
        throw CertificateVerificationFailed("basis must have d/2 rows");
    for (const json& row : basis) {
        if (!row.is_array() || static_cast<int>(row.size()) != cert.d)
            throw CertificateVerificationFailed("basis row of wrong length");
        ModVector r;
        for (const json& v : row) {
            long x = to_long(int_from_json(v, "basis"));
            if (x < 0 || x >= cert.p)
                throw CertificateVerificationFailed("basis entries must be reduced mod p");
            r.push_back(x);
        }
        cert.basis.push_back(std::move(r));
    }
    for (size_t i = 0; i < cert.basis.size(); ++i)
        for (size_t k = 0; k < cert.basis.size(); ++k)
            if (cert.basis[i][k] != (i == k ? 1 : 0))
                throw CertificateVerificationFailed("basis is not echelon-normalized");

    const json& summed = need("summed_vector");
    if (!summed.is_array() || static_cast<int>(summed.size()) != cert.d)
        throw CertificateVerificationFailed("summed_vector of wrong length");
    for (const json& v : summed)
        cert.summed.push_back(to_long(int_from_json(v, "summed_vector")));
    for (int jx = 0; jx < cert.d; ++jx) {
        long acc = 0;
        for (const ModVector& row : cert.basis)
            acc = mod_reduce(acc + row[static_cast<size_t>(jx)], cert.p);
        if (acc != mod_reduce(cert.summed[static_cast<size_t>(jx)], cert.p))
            throw CertificateVerificationFailed("summed_vector is not the basis sum");
    }

    DiagonalLinkingSpace space{cert.p, cert.d, cert.c};
    if (!is_self_annihilating(space, cert.basis))
        throw CertificateVerificationFailed("basis does not span a self-annihilating subgroup");

    auto ring_from = [&](const json& arr, const char* name) {
        if (!arr.is_array() || static_cast<long>(arr.size()) != table.q())
            throw CertificateVerificationFailed(std::string(name) + " must have q entries");
        std::vector<Int> c;
        for (const json& v : arr)
            c.push_back(int_from_json(v, name));
        return GroupRingElement(table.q(), std::move(c));
    };
    cert.relation = ring_from(need("relation_coeffs"), "relation_coeffs");
    cert.cofactor = ring_from(need("cofactor_coeffs"), "cofactor_coeffs");
    cert.n = int_from_json(need("integer_n"), "integer_n");

    if (!(relation_from_vector(cert.summed, table) == cert.relation))
        throw CertificateVerificationFailed("relation does not match the summed vector");
    if (cert.n < 1)
        throw CertificateVerificationFailed("integer_n must be positive");
    GroupRingElement expected = GroupRingElement::monomial(table.q(), 0, cert.n);
    if (!(ring_multiply(cert.cofactor, cert.relation) == expected))
        throw CertificateVerificationFailed("cofactor * relation != n");
    return cert;
}

// --- analysis ----------------------------------------------------------------

namespace {

bool quadratic_family_twist(const IntPolynomial& alex, Int& a_out) {
    const auto& c = alex.coeffs();
    if (c.size() != 3)
        return false;
    if (c[0] != c[2] || c[0] < 1)
        return false;
    if (c[1] != -(1 + 2 * c[0]))
        return false;
    a_out = c[0];
    return true;
}

AnalyzeReport analyze_common(IntPolynomial alex, Int det) {
    AnalyzeReport rep;
    rep.alexander = std::move(alex);
    rep.determinant = std::move(det);
    rep.verdict = infinite_order_verdict(rep.determinant);
    Int a;
    rep.quadratic_order4 = quadratic_family_twist(rep.alexander, a) && quadratic_order4_check(a);
    return rep;
}

} // namespace

AnalyzeReport analyze_matrix(const SeifertMatrix& V) {
    AnalyzeReport rep = analyze_common(alexander_polynomial(V), knot_determinant(V));
    rep.genus = V.genus();
    rep.homology = branched_cover_homology(V);
    for (const PrimePower& f : rep.verdict.factorization) {
        if (f.prime == 2 || f.exponent != 1)
            continue;
        PrimaryLinkingForm form = primary_linking_form(V, f.prime);
        Character chi{f.prime, 1};
        PrimeAnalysis pa;
        pa.p = f.prime;
        pa.c = form.c;
        pa.square_class = form.square_class;
        pa.bordism_of_unit = bordism_class(form, chi);
        pa.sigma = sigma_p_mod_p(f.prime, pa.bordism_of_unit);
        rep.primes.push_back(std::move(pa));
    }
    return rep;
}

AnalyzeReport analyze_record(const KnotRecord& record) {
    return analyze_common(record.alexander, record.determinant);
}

std::string render_analyze_report(const AnalyzeReport& rep, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json j;
        if (rep.genus)
            j["genus"] = *rep.genus;
        j["alexander"] = rep.alexander.to_string();
        j["alexander_coeffs"] = coeffs_to_json(rep.alexander.coeffs());
        j["determinant"] = json_int(rep.determinant);
        if (rep.homology) {
            json inv = json::array();
            for (const Int& f : rep.homology->invariant_factors())
                inv.push_back(json_int(f));
            j["branched_cover_homology"] = inv;
        }
        json primes = json::array();
        for (const PrimeAnalysis& pa : rep.primes)
            primes.push_back({{"p", json_int(pa.p)},
                              {"self_linking_unit", json_int(pa.c)},
                              {"square_class", pa.square_class},
                              {"bordism_class", json_int(pa.bordism_of_unit)},
                              {"sigma", json_int(pa.sigma)}});
        j["primes"] = primes;
        j["quadratic_order4"] = rep.quadratic_order4;
        j["verdict"] = verdict_to_json(rep.verdict);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (rep.genus)
        os << "seifert matrix: " << 2 * *rep.genus << "x" << 2 * *rep.genus << " (genus "
           << *rep.genus << ")\n";
    os << "alexander polynomial: " << rep.alexander.to_string() << "\n";
    os << "determinant: " << rep.determinant.get_str();
    if (rep.determinant > 1)
        os << " = " << factorization_string(rep.verdict.factorization);
    os << "\n";
    if (rep.homology)
        os << "branched cover homology: " << rep.homology->to_string() << "\n";
    for (const PrimeAnalysis& pa : rep.primes) {
        os << "p = " << pa.p.get_str() << ": self-linking " << pa.c.get_str() << "/"
           << pa.p.get_str() << " (" << (pa.square_class > 0 ? "residue" : "nonresidue")
           << "), bordism class " << pa.bordism_of_unit.get_str() << ", sigma "
           << pa.sigma.get_str();
        if (pa.p % 4 == 3)
            os << ", qualifies (3 mod 4, divides determinant exactly once)";
        os << "\n";
    }
    os << "quadratic order-4 criterion: " << (rep.quadratic_order4 ? "satisfied" : "not applicable")
       << "\n";
    os << "verdict: " << rep.verdict.to_string() << "\n";
    return os.str();
}

TableReport analyze_table(const std::vector<KnotRecord>& records) {
    TableReport report;
    std::map<Int, int> partition;
    for (const KnotRecord& rec : records) {
        TableRow row;
        row.name = rec.name;
        row.determinant = rec.determinant;
        row.verdict = infinite_order_verdict(rec.determinant);
        if (row.verdict.is_infinite_order())
            partition[row.verdict.witness] += 1;
        else
            report.inconclusive += 1;
        report.rows.push_back(std::move(row));
    }
    report.witness_partition.assign(partition.begin(), partition.end());
    return report;
}

std::string render_table_report(const TableReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json j;
        json rows = json::array();
        for (const TableRow& r : report.rows)
            rows.push_back({{"name", r.name},
                            {"determinant", json_int(r.determinant)},
                            {"verdict", verdict_to_json(r.verdict)}});
        j["rows"] = rows;
        json part = json::array();
        for (const auto& [p, count] : report.witness_partition)
            part.push_back({{"witness", json_int(p)}, {"knots", count}});
        j["witness_partition"] = part;
        j["inconclusive"] = report.inconclusive;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    size_t name_w = 4, det_w = 11;
    for (const TableRow& r : report.rows) {
        name_w = std::max(name_w, r.name.size());
        det_w = std::max(det_w, r.determinant.get_str().size());
    }
    os << std::left;
    os.width(static_cast<std::streamsize>(name_w + 2));
    os << "name";
    os.width(static_cast<std::streamsize>(det_w + 2));
    os << "determinant";
    os << "verdict\n";
    for (const TableRow& r : report.rows) {
        os.width(static_cast<std::streamsize>(name_w + 2));
        os << r.name;
        os.width(static_cast<std::streamsize>(det_w + 2));
        os << r.determinant.get_str();
        os << r.verdict.to_string() << "\n";
    }
    os << "witness partition:";
    if (report.witness_partition.empty())
        os << " (none)";
    for (size_t i = 0; i < report.witness_partition.size(); ++i) {
        const auto& [p, count] = report.witness_partition[i];
        os << (i ? "; " : " ") << "p = " << p.get_str() << ": " << count
           << (count == 1 ? " knot" : " knots");
    }
    os << "\n";
    os << "inconclusive: " << report.inconclusive << "\n";
    return os.str();
}

std::string render_certify_report(const CertifyResult& result, OutputFormat format) {
    if (format == OutputFormat::Json)
        return certificates_to_json(result);
    std::ostringstream os;
    if (result.verdict == CertifyVerdict::NoMetabolizerPossible) {
        os << "no metabolizer exists; every vanishing obstruction is ruled out\n";
        return os.str();
    }
    os << result.certificates.size()
       << (result.certificates.size() == 1 ? " metabolizer" : " metabolizers")
       << ", all certified\n";
    size_t idx = 0;
    for (const MetabolizerCertificate& c : result.certificates) {
        ++idx;
        os << "metabolizer " << idx << ": basis ";
        for (size_t i = 0; i < c.basis.size(); ++i) {
            os << "(";
            for (size_t j = 0; j < c.basis[i].size(); ++j)
                os << (j ? "," : "") << c.basis[i][j];
            os << ")";
        }
        os << " permutation [";
        for (size_t i = 0; i < c.permutation.size(); ++i)
            os << (i ? "," : "") << c.permutation[i];
        os << "] relation " << c.relation.to_string() << " | cofactor "
           << c.cofactor.to_string() << " | n = " << c.n.get_str() << "\n";
    }
    return os.str();
}

std::string render_family_report(const std::vector<FamilyMember>& members,
                                 const FamilyReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json j;
        json arr = json::array();
        for (size_t i = 0; i < members.size(); ++i) {
            const FamilyMember& m = members[i];
            const FamilyMemberChecks& c = report.members[i];
            arr.push_back({{"index", m.index},
                           {"primes", {json_int(m.p_first), json_int(m.p_second)}},
                           {"twist", json_int(m.twist)},
                           {"determinant", json_int(m.p_first * m.p_second)},
                           {"primes_three_mod_four", c.primes_three_mod_four},
                           {"determinant_splits", c.determinant_splits},
                           {"order4_candidate", c.order4_candidate}});
        }
        j["members"] = arr;
        j["pairwise_coprime"] = report.pairwise_coprime;
        j["independent"] = report.all_ok;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (size_t i = 0; i < members.size(); ++i) {
        const FamilyMember& m = members[i];
        const FamilyMemberChecks& c = report.members[i];
        os << "member " << m.index << ": primes (" << m.p_first.get_str() << ", "
           << m.p_second.get_str() << "), twist " << m.twist.get_str() << ", determinant "
           << Int(m.p_first * m.p_second).get_str();
        os << ", checks: primes 3 mod 4 " << (c.primes_three_mod_four ? "yes" : "NO")
           << ", determinant splits " << (c.determinant_splits ? "yes" : "NO")
           << ", order-4 candidate " << (c.order4_candidate ? "yes" : "NO") << "\n";
    }
    os << "pairwise coprime: " << (report.pairwise_coprime ? "yes" : "NO") << "\n";
    os << "independence: " << (report.all_ok ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string ring_demo(OutputFormat format) {
    const long p = 19;
    DlogTable table = DlogTable::build(p);
    std::vector<long> x{2, 3, 15, 16};
    GroupRingElement f = relation_from_vector(x, table);
    const long a = 5;
    GroupRingElement fa = scalar_action(x, a, table);
    long shift = table.dlog(a) % table.q();
    GroupRingElement shifted = ring_multiply(GroupRingElement::monomial(table.q(), shift), f);
    bool matches = fa == shifted;
    IntegerIdealCertificate cert = integer_in_ideal(f);

    if (format == OutputFormat::Json) {
        json j;
        j["p"] = p;
        j["q"] = table.q();
        j["generator"] = table.g();
        j["x"] = x;
        json dlogs = json::array();
        for (long v : x)
            dlogs.push_back(table.dlog(v));
        j["dlogs"] = dlogs;
        j["relation"] = f.to_string();
        j["relation_coeffs"] = coeffs_to_json(f.coeffs());
        j["scalar"] = a;
        j["scalar_dlog"] = table.dlog(a);
        j["scaled_relation"] = fa.to_string();
        j["shift_matches"] = matches;
        j["integer_n"] = json_int(cert.n);
        j["cofactor"] = cert.h.to_string();
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "p = " << p << ", q = " << table.q() << ", primitive root g = " << table.g() << "\n";
    os << "character vector x = (2, 3, 15, 16) over Z_" << p << "\n";
    os << "discrete logs base " << table.g() << ":";
    for (long v : x)
        os << " " << v << " = " << table.g() << "^" << table.dlog(v);
    os << "\n";
    os << "exponents mod q:";
    for (long v : x)
        os << " " << table.dlog(v) % table.q();
    os << "\n";
    os << "relation f = " << f.to_string() << "\n";
    os << "scalar action by " << a << " = " << table.g() << "^" << table.dlog(a)
       << ": relation of " << a << "x = " << fa.to_string() << "\n";
    os << "t^" << shift << " * f = " << shifted.to_string() << " -> "
       << (matches ? "matches" : "MISMATCH") << "\n";
    os << "integer in the ideal: n = " << cert.n.get_str() << ", cofactor h = "
       << cert.h.to_string() << "\n";
    os << "check: h * f = " << ring_multiply(cert.h, f).to_string() << "\n";
    return os.str();
}

} // namespace concord
