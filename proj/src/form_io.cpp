#include "apolar/form_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace apolar {

std::string shape_name(ShapeTag s) { return s == ShapeTag::W ? "W" : "WZ"; }

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
};

long parse_uint(Cursor& c, const char* what) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  if (c.i == start) throw ParseError("syntax", std::string("expected ") + what);
  return std::stol(c.s.substr(start, c.i - start));
}

}  // namespace

DualForm parse_form(const std::string& text, const VariableSet& vars,
                    const Field& field) {
  // variable names, longest first, so multi-character names win
  std::vector<std::size_t> by_length(vars.count());
  for (std::size_t i = 0; i < vars.count(); ++i) by_length[i] = i;
  std::sort(by_length.begin(), by_length.end(), [&](std::size_t a, std::size_t b) {
    return vars.dual_name(a).size() > vars.dual_name(b).size();
  });

  DualForm out(vars, field);
  Cursor c{text};
  if (c.done()) throw ParseError("syntax", "empty form");

  bool first_term = true;
  while (!c.done()) {
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.s[c.i] == '-') sign = -1;
      ++c.i;
    } else if (!first_term) {
      throw ParseError("syntax", "expected '+' or '-' between terms");
    }
    first_term = false;
    if (c.done()) throw ParseError("syntax", "dangling sign");

    Scalar coeff = Scalar::one(field);
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      long num = parse_uint(c, "coefficient");
      if (!c.done() && c.s[c.i] == '/') {
        ++c.i;
        long den = parse_uint(c, "denominator");
        if (den == 0) throw ParseError("bad-coefficient", "zero denominator");
        if (!field.is_rational())
          coeff = Scalar::integer(num, field) / Scalar::integer(den, field);
        else
          coeff = Scalar::rational(num, den);
      } else {
        coeff = Scalar::integer(num, field);
      }
      if (!c.done() && c.s[c.i] == '.') ++c.i;  // "2.Y^[4]" style dot
    }
    if (sign < 0) coeff = -coeff;

    Exponent e(vars.count(), 0);
    bool any_factor = false;
    while (!c.done() && c.peek() != '+' && c.peek() != '-') {
      c.skip_ws();
      std::size_t var = vars.count();
      for (std::size_t cand : by_length) {
        const std::string& name = vars.dual_name(cand);
        if (c.s.compare(c.i, name.size(), name) == 0) {
          var = cand;
          break;
        }
      }
      if (var == vars.count())
        throw ParseError("unknown-variable",
                         "unknown variable at '" + c.s.substr(c.i, 8) + "'");
      c.i += vars.dual_name(var).size();
      long exp = 1;
      if (c.i < c.s.size() && c.s[c.i] == '^') {
        ++c.i;
        if (c.i >= c.s.size() || c.s[c.i] != '[')
          throw ParseError("malformed-exponent", "expected '[' after '^'");
        ++c.i;
        exp = parse_uint(c, "exponent");
        c.skip_ws();
        if (c.i >= c.s.size() || c.s[c.i] != ']')
          throw ParseError("malformed-exponent", "expected ']'");
        ++c.i;
      }
      e[var] += static_cast<int>(exp);
      any_factor = true;
    }
    if (!any_factor)
      throw ParseError("syntax", "term without a variable factor");
    out.add_term(e, coeff);
  }
  if (out.is_zero()) throw ParseError("zero-form", "form sums to zero");
  return out;
}

std::string render_form(const DualForm& F) { return F.str(); }

NormalForm validate_normal_form(const DualForm& F, bool auto_normalize) {
  if (F.is_zero()) throw ValidationError("zero-form", "zero form");
  if (!F.is_homogeneous())
    throw ValidationError("inhomogeneous", "form is not homogeneous");
  const int j = F.degree();
  if (j < 2) throw ValidationError("socle-degree", "socle degree must be >= 2");

  const VariableSet& vars = F.vars();
  const std::size_t w = vars.w_index(), z = vars.z_index();
  const Field& k = F.field();
  if (!k.is_rational() && static_cast<long>(k.modulus()) <= j)
    throw ValidationError("field-too-small",
                          "prime modulus must exceed the socle degree");

  // locate the W-term
  std::vector<Exponent> wterms;
  for (const auto& [e, c] : F.terms())
    if (e[w] > 0) wterms.push_back(e);
  if (wterms.empty())
    throw ValidationError("no-socle-term", "no term involves W");
  if (wterms.size() > 1)
    throw ValidationError("multiple-socle-terms",
                          "more than one term involves W");

  const Exponent& we = wterms.front();
  ShapeTag shape;
  if (we[w] == j) {
    for (std::size_t i = 0; i < we.size(); ++i)
      if (i != w && we[i] != 0)
        throw ValidationError("bad-socle-term", "mixed W term");
    shape = ShapeTag::W;
  } else if (we[w] == 1 && we[z] == j - 1) {
    for (std::size_t i = 0; i < we.size(); ++i)
      if (i != w && i != z && we[i] != 0)
        throw ValidationError("bad-socle-term", "mixed W term");
    shape = ShapeTag::WZ;
  } else {
    throw ValidationError("bad-socle-term",
                          "W term is neither W^[j] nor W Z^[j-1]");
  }

  NormalForm nf{shape, F, DualForm(vars, k), F.coefficient(we), j, false, {}};
  nf.G = F;
  nf.G.add_term(we, -nf.w_coeff);

  if (shape == ShapeTag::WZ) {
    // terms of G equal to (one variable) * Z^[j-1] can be absorbed into W
    std::vector<Exponent> bad;
    for (const auto& [e, c] : nf.G.terms()) {
      if (e[z] != j - 1) continue;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != z && e[i] == 1) bad.push_back(e);
    }
    if (!bad.empty()) {
      if (!auto_normalize)
        throw ValidationError(
            "linear-socle-term",
            "G has a term (linear form) * Z^[j-1]; rerun with "
            "auto-normalization to absorb it into W");
      for (const Exponent& e : bad) {
        Scalar c = nf.G.coefficient(e);
        nf.G.add_term(e, -c);
        nf.F.add_term(e, -c);
      }
      nf.findings.push_back("auto-normalized: absorbed " +
                            std::to_string(bad.size()) +
                            " linear socle term(s) into W");
    }
  }

  if (nf.G.is_zero())
    nf.findings.push_back("G is zero; the form is a bare socle term");

  // expected quadric space: w^2 and w x_i (i < n) for the WZ shape,
  // w x_i (all i) for the W shape
  {
    SanityReport sanity = gorenstein_sanity(nf.F);
    std::size_t n = vars.n();
    bool quadrics_ok = sanity.dim_i2 == n;
    auto annihilates = [&](const Exponent& e) {
      RingElement m = RingElement::monomial(vars, e, Scalar::one(k));
      return contract(m, nf.F).is_zero();
    };
    for (std::size_t i = 0; quadrics_ok && i < vars.count(); ++i) {
      if (i == w) continue;
      Exponent e(vars.count(), 0);
      e[w] = 1;
      e[i] = 1;
      bool expected = shape == ShapeTag::W ? true : i != z;
      if (expected && !annihilates(e)) quadrics_ok = false;
    }
    if (shape == ShapeTag::WZ) {
      Exponent e(vars.count(), 0);
      e[w] = 2;
      if (!annihilates(e)) quadrics_ok = false;
    }
    nf.i2_pattern = quadrics_ok;
    if (!quadrics_ok)
      nf.findings.push_back(
          "ann(F)_2 is not the expected quadric space; the structure "
          "results are reported without their standing hypothesis");
  }
  return nf;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

FormDocument parse_document(const std::string& content) {
  std::istringstream is(content);
  std::string line;
  std::vector<std::string> var_names;
  std::string socle, field_text = "Q", form_text, label, note;
  std::optional<long> mu_i, mu_j;
  std::optional<bool> generic;

  while (std::getline(is, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t colon = t.find(':');
    if (colon == std::string::npos)
      throw ParseError("bad-header", "expected 'key: value' line: " + t);
    std::string key = trim(t.substr(0, colon));
    std::string value = trim(t.substr(colon + 1));
    if (key == "vars")
      var_names = split_ws(value);
    else if (key == "socle")
      socle = value;
    else if (key == "field")
      field_text = value;
    else if (key == "form")
      form_text = value;
    else if (key == "label")
      label = value;
    else if (key == "note")
      note = value;
    else if (key == "expect.muI")
      mu_i = std::stol(value);
    else if (key == "expect.muJ")
      mu_j = std::stol(value);
    else if (key == "expect.generic")
      generic = value == "true" || value == "1";
    else
      throw ParseError("bad-header", "unknown header key '" + key + "'");
  }

  if (var_names.empty()) throw ParseError("bad-header", "missing 'vars:' line");
  if (form_text.empty()) throw ParseError("bad-header", "missing 'form:' line");

  // the socle variable goes last; the first variable is W
  if (!socle.empty()) {
    auto it = std::find(var_names.begin(), var_names.end(), socle);
    if (it == var_names.end())
      throw ParseError("bad-header", "socle variable not declared");
    if (it == var_names.begin())
      throw ParseError("bad-header", "socle variable cannot be W");
    std::rotate(it, it + 1, var_names.end());
  }

  Field field = Field::rationals();
  if (field_text != "Q" && field_text != "q") {
    if (field_text.rfind("p=", 0) != 0)
      throw ParseError("bad-header", "field must be Q or p=<prime>");
    field = Field::prime(std::stoull(field_text.substr(2)));
  }

  VariableSet vars = VariableSet::make(var_names);
  DualForm form = parse_form(form_text, vars, field);
  return FormDocument{vars,  field, form_text, form,    label,
                      note,  mu_i,  mu_j,      generic, false};
}

FormDocument load_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

namespace {

struct RawEntry {
  const char* label;
  const char* vars;
  const char* form;
  long mu_i;       // -1 = not recorded
  long mu_j;       // -1 = not recorded
  int generic;     // 1 / 0 / -1 = not recorded
  bool informational;
  const char* note;
};

// Expected values follow the source table for each entry; entries whose
// recorded verdict conflicts with its own counts are marked informational.
const RawEntry kCorpus[] = {
    {"lift-pair-base", "W X Y Z",
     "X^[6]Y^[2]+XY^[3]Z^[4]+YZ^[7]+WZ^[7]", 9, 5, 1, true,
     "recorded as mu 9/5 and generic, but exact computation gives mu(J) = 6 "
     "(generators x^2z, y^4, x^5+xy^3z-yz^4, x^2y^3, xz^5, z^8) and r = 1; "
     "the form also needs its YZ^[7] term absorbed into W"},
    {"lift-pair-raised", "W X Y Z",
     "X^[8]Y^[2]+X^[3]Y^[3]Z^[4]+X^[2]YZ^[7]+WZ^[9]", 13, 9, 1, true,
     "the base form with G shifted twice by X; recorded as mu 13/9 and "
     "generic, but exact computation (confirmed by an independent "
     "elimination) gives mu 9/6 and r = 1; shifting G by X three or more "
     "times does reach a generic form with mu 9/5"},
    {"converse-base", "W X Y Z",
     "Y^[5]Z^[8]+Y^[4]Z^[9]+X^[5]Y^[6]Z^[2]+X^[5]Y^[7]Z+X^[5]Y^[8]"
     "+X^[5]Z^[8]+WZ^[12]",
     11, 8, 0, false, ""},
    {"converse-raised", "W X Y Z",
     "XY^[5]Z^[8]+XY^[4]Z^[9]+X^[6]Y^[6]Z^[2]+X^[6]Y^[7]Z+X^[6]Y^[8]"
     "+X^[6]Z^[8]+WZ^[13]",
     13, 9, 1, false,
     "raised form is generic although the base form is not"},
    {"sweep-base", "W X Y Z",
     "Y^[3]Z^[10]+Y^[4]Z^[9]+Y^[5]Z^[8]+Y^[2]Z^[11]+X^[6]Y^[4]Z^[3]"
     "+X^[6]Y^[2]Z^[5]+X^[6]Z^[7]+X^[7]Y^[3]Z^[3]+X^[7]YZ^[5]+X^[7]Z^[6]"
     "+WZ^[12]",
     -1, -1, 0, false,
     "base of the X^t / Y^t shift sweep: X needs t=4, Y needs t=5"},
    {"dim5-base", "W T X Y Z",
     "Y^[3]Z^[9]+Y^[4]Z^[8]+T^[3]Z^[9]+X^[3]TY^[4]Z^[4]+X^[3]Z^[9]+WZ^[11]",
     14, 10, 0, false,
     "transcribed from a source with unbalanced delimiters; degrees checked "
     "at load"},
    {"dim5-raised", "W T X Y Z",
     "XY^[3]Z^[9]+XY^[4]Z^[8]+XT^[3]Z^[9]+X^[4]TY^[4]Z^[4]+X^[4]Z^[9]"
     "+WZ^[12]",
     16, 11, 1, false, ""},
    {"tall-block", "W X Y Z",
     "Y^[10]Z^[5]+Y^[9]Z^[6]+Y^[6]Z^[9]+X^[11]Y^[2]Z^[2]+X^[11]Z^[4]"
     "+WZ^[14]",
     9, 6, 0, false, ""},
    {"coeff-a", "W X Y Z",
     "Y^[3]Z^[8]+Y^[4]Z^[7]+X^[5]Y^[4]Z^[2]+X^[5]Y^[3]Z^[3]+X^[5]Z^[6]"
     "+WZ^[10]",
     9, 5, 1, false, ""},
    {"coeff-b", "W X Y Z",
     "Y^[3]Z^[8]+Y^[4]Z^[7]+2X^[5]Y^[4]Z^[2]+X^[5]Y^[3]Z^[3]+X^[5]Z^[6]"
     "+WZ^[10]",
     11, 8, 0, false,
     "doubling one block coefficient of coeff-a flips the verdict"},
    {"single-block-eq", "W X Y Z",
     "Y^[4]Z^[10]+Y^[3]Z^[11]+X^[8]Y^[4]Z^[2]+X^[8]Y^[3]Z^[3]"
     "+X^[8]Y^[2]Z^[4]+X^[8]Z^[6]+WZ^[13]",
     11, 7, 1, false, ""},
    {"single-block-high", "W X Y Z",
     "Y^[4]Z^[10]+Y^[3]Z^[11]+X^[8]Y^[5]Z+X^[8]Y^[4]Z^[2]+X^[8]Y^[3]Z^[3]"
     "+X^[8]Y^[2]Z^[4]+X^[8]Z^[6]+WZ^[13]",
     11, 8, 0, false, ""},
    {"low-shift-a", "W X Y Z",
     "Y^[4]Z^[7]+Y^[3]Z^[8]+X^[4]Y^[4]Z^[3]+X^[4]Z^[7]+WZ^[10]", 9, 6, -1,
     true,
     "source calls this form generic, but the recorded counts say it is "
     "not; counts are checked, the verdict is reported"},
    {"low-shift-b", "W X Y Z",
     "Y^[4]Z^[7]+X^[4]Y^[4]Z^[3]+X^[4]Z^[7]+WZ^[10]", 9, 5, -1, true,
     "source calls this form non-generic, but the recorded counts say it "
     "is; counts are checked, the verdict is reported"},
    {"three-block-a", "W X Y Z",
     "Y^[5]Z^[12]+Y^[4]Z^[13]+X^[8]Y^[4]Z^[5]+X^[8]Y^[3]Z^[6]"
     "+X^[8]Y^[2]Z^[7]+X^[8]YZ^[8]+X^[9]Y^[4]Z^[4]+X^[9]Y^[3]Z^[5]"
     "+X^[10]Y^[5]Z^[2]+X^[10]Y^[4]Z^[3]+X^[10]Y^[3]Z^[4]+X^[10]Z^[7]"
     "+WZ^[16]",
     -1, -1, 1, false, ""},
    {"three-block-b", "W X Y Z",
     "Y^[5]Z^[12]+Y^[4]Z^[13]+X^[7]Y^[4]Z^[6]+X^[7]Y^[3]Z^[7]"
     "+X^[7]Y^[2]Z^[8]+X^[7]YZ^[9]+X^[9]Y^[4]Z^[4]+X^[9]Y^[3]Z^[5]"
     "+X^[11]Y^[5]Z+X^[11]Y^[4]Z^[2]+X^[11]Y^[3]Z^[3]+X^[11]Z^[6]"
     "+WZ^[16]",
     -1, -1, 0, false, ""},
    {"top-block-a", "W X Y Z",
     "Y^[5]Z^[12]+Y^[4]Z^[13]+X^[9]Y^[4]Z^[4]+X^[10]Y^[6]Z"
     "+X^[10]Y^[3]Z^[4]+X^[10]Y^[2]Z^[5]+X^[10]Z^[7]+X^[12]YZ^[4]"
     "+X^[12]Z^[5]+WZ^[16]",
     15, 11, 1, false, ""},
    {"top-block-b", "W X Y Z",
     "Y^[5]Z^[12]+Y^[4]Z^[13]+X^[9]Y^[4]Z^[4]+X^[10]Y^[6]Z"
     "+X^[10]Y^[3]Z^[4]+X^[10]Y^[2]Z^[5]+X^[10]Z^[7]+WZ^[16]",
     15, 12, 0, false, "top-block-a without its highest block"},
};

}  // namespace

const std::vector<FormDocument>& corpus() {
  static const std::vector<FormDocument> entries = [] {
    std::vector<FormDocument> out;
    for (const RawEntry& raw : kCorpus) {
      VariableSet vars = VariableSet::make(split_ws(raw.vars));
      DualForm form = parse_form(raw.form, vars, Field::rationals());
      if (!form.is_homogeneous())
        throw InternalError(std::string("corpus entry '") + raw.label +
                            "' is not homogeneous");
      FormDocument doc{vars,
                       Field::rationals(),
                       raw.form,
                       form,
                       raw.label,
                       raw.note,
                       raw.mu_i >= 0 ? std::optional<long>(raw.mu_i)
                                     : std::nullopt,
                       raw.mu_j >= 0 ? std::optional<long>(raw.mu_j)
                                     : std::nullopt,
                       raw.generic >= 0 ? std::optional<bool>(raw.generic == 1)
                                        : std::nullopt,
                       raw.informational};
      out.push_back(std::move(doc));
    }
    return out;
  }();
  return entries;
}

}  // namespace apolar
