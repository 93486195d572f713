#include "semicyclic/tangle.hpp"

#include "semicyclic/cyclo.hpp"

#include <array>
#include <sstream>

namespace semicyclic {

const char* slice_kind_name(SliceKind k) {
    switch (k) {
    case SliceKind::cup_plain: return "cup_plain";
    case SliceKind::cup_twisted: return "cup_twisted";
    case SliceKind::cap_plain: return "cap_plain";
    case SliceKind::cap_twisted: return "cap_twisted";
    case SliceKind::cross_pos: return "cross+";
    case SliceKind::cross_neg: return "cross-";
    case SliceKind::id: return "id";
    }
    return "?";
}

namespace {

bool kind_from_name(const std::string& name, SliceKind& out) {
    for (SliceKind k : {SliceKind::cup_plain, SliceKind::cup_twisted, SliceKind::cap_plain,
                        SliceKind::cap_twisted, SliceKind::cross_pos, SliceKind::cross_neg,
                        SliceKind::id}) {
        if (name == slice_kind_name(k)) {
            out = k;
            return true;
        }
    }
    return false;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

ValidationReport validate(const Diagram& d) {
    ValidationReport report;
    Signature sig = d.bottom;
    report.stages.push_back(sig);
    report.max_width = static_cast<int>(sig.size());

    auto fail = [&](int idx, const std::string& msg) { report.issues.push_back({idx, msg}); };

    for (size_t s = 0; s < d.slices.size(); ++s) {
        const Slice& sl = d.slices[s];
        const int w = static_cast<int>(sig.size());
        const int p = sl.position;
        const std::string where = std::string(slice_kind_name(sl.kind)) + " @" + std::to_string(p);
        switch (sl.kind) {
        case SliceKind::id:
            if (p < 0 || p >= w) {
                fail(static_cast<int>(s), where + ": strand index out of range (width " +
                                              std::to_string(w) + ")");
            }
            break;
        case SliceKind::cup_plain:
        case SliceKind::cup_twisted: {
            if (p < 0 || p > w) {
                fail(static_cast<int>(s), where + ": insertion point out of range (width " +
                                              std::to_string(w) + ")");
                break;
            }
            const bool twisted = sl.kind == SliceKind::cup_twisted;
            // cup_plain creates (down, up) = e_i (x) e^i; cup_twisted (up, down).
            sig.insert(sig.begin() + p, {twisted ? Orientation::up : Orientation::down,
                                         twisted ? Orientation::down : Orientation::up});
            break;
        }
        case SliceKind::cap_plain:
        case SliceKind::cap_twisted: {
            if (p < 0 || p + 1 >= w) {
                fail(static_cast<int>(s), where + ": needs two adjacent strands (width " +
                                              std::to_string(w) + ")");
                break;
            }
            const bool twisted = sl.kind == SliceKind::cap_twisted;
            const Orientation left = twisted ? Orientation::down : Orientation::up;
            const Orientation right = twisted ? Orientation::up : Orientation::down;
            if (sig[static_cast<size_t>(p)] != left || sig[static_cast<size_t>(p) + 1] != right) {
                fail(static_cast<int>(s),
                     where + ": expects orientations (" +
                         std::string(1, orientation_char(left)) + "," +
                         std::string(1, orientation_char(right)) + "), found (" +
                         orientation_char(sig[static_cast<size_t>(p)]) + "," +
                         orientation_char(sig[static_cast<size_t>(p) + 1]) + ")");
                break;
            }
            sig.erase(sig.begin() + p, sig.begin() + p + 2);
            break;
        }
        case SliceKind::cross_pos:
        case SliceKind::cross_neg: {
            if (p < 0 || p + 1 >= w) {
                fail(static_cast<int>(s), where + ": needs two adjacent strands (width " +
                                              std::to_string(w) + ")");
                break;
            }
            if (sig[static_cast<size_t>(p)] != Orientation::down ||
                sig[static_cast<size_t>(p) + 1] != Orientation::down) {
                fail(static_cast<int>(s),
                     where + ": crossings are only defined on two downward strands");
            }
            break;
        }
        }
        report.stages.push_back(sig);
        report.max_width = std::max(report.max_width, static_cast<int>(sig.size()));
        if (!report.issues.empty()) break; // widths are unreliable past the first failure
    }

    report.valid = report.issues.empty();
    if (report.valid) {
        report.top = sig;
        const Signature one_down = all_down(1);
        const Signature two_down = all_down(2);
        if (d.bottom == one_down && sig == one_down)
            report.diagram_class = "(1,1)";
        else if (d.bottom == two_down && sig == two_down)
            report.diagram_class = "(2,2)";
        else
            report.diagram_class = "other";
    }
    return report;
}

Diagram parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Diagram d;
    bool saw_header = false, saw_bottom = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        const std::string body = strip(line);
        if (body.empty()) continue;

        if (!saw_header) {
            if (body != "tangle v1") throw ParseError("expected header 'tangle v1'", lineno, 1);
            saw_header = true;
            continue;
        }
        if (!saw_bottom) {
            if (body.rfind("bottom:", 0) != 0)
                throw ParseError("expected 'bottom:' signature line", lineno, 1);
            std::string rest = strip(body.substr(7));
            if (!rest.empty()) {
                std::istringstream items(rest);
                std::string item;
                while (std::getline(items, item, ',')) {
                    const std::string v = strip(item);
                    if (v == "d")
                        d.bottom.push_back(Orientation::down);
                    else if (v == "u")
                        d.bottom.push_back(Orientation::up);
                    else
                        throw ParseError("signature entries must be 'd' or 'u', got '" + v + "'",
                                         lineno, static_cast<int>(body.find(v)) + 1);
                }
            }
            saw_bottom = true;
            continue;
        }

        const size_t at = body.find('@');
        if (at == std::string::npos)
            throw ParseError("slice line needs '@<strand>'", lineno, static_cast<int>(body.size()));
        const std::string kw = strip(body.substr(0, at));
        SliceKind kind;
        if (!kind_from_name(kw, kind))
            throw ParseError("unknown slice keyword '" + kw + "'", lineno, 1);
        const std::string pos_str = strip(body.substr(at + 1));
        int pos = 0;
        try {
            size_t used = 0;
            pos = std::stoi(pos_str, &used);
            if (used != pos_str.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("malformed strand index '" + pos_str + "'", lineno,
                             static_cast<int>(at) + 2);
        }
        d.slices.push_back({kind, pos});
    }
    if (!saw_header) throw ParseError("empty input; expected 'tangle v1'", lineno, 1);
    if (!saw_bottom) throw ParseError("missing 'bottom:' line", lineno, 1);

    auto report = validate(d);
    if (!report.valid) {
        const auto& issue = report.issues.front();
        throw ParseError(issue.message, issue.slice_index + 3, 1);
    }
    return d;
}

std::string serialize(const Diagram& d) {
    std::ostringstream os;
    os << "tangle v1\n";
    os << "bottom: " << signature_string(d.bottom) << "\n";
    for (const auto& s : d.slices) os << slice_kind_name(s.kind) << " @" << s.position << "\n";
    return os.str();
}

namespace {

Diagram make(Signature bottom, std::vector<Slice> slices) {
    return Diagram{std::move(bottom), std::move(slices)};
}

} // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"unknot", "unknot_twisted", "trefoil",
                                                   "figure_eight"};
    return names;
}

Diagram builtin(const std::string& name) {
    using K = SliceKind;
    if (name == "unknot") return make(all_down(1), {{K::id, 0}});
    if (name == "unknot_twisted") {
        // one positive kink: the sigma_1 closure
        return make(all_down(1), {{K::cup_twisted, 0},
                                  {K::cross_pos, 1},
                                  {K::cap_plain, 0}});
    }
    if (name == "trefoil") {
        // closure of sigma_1^3 with one strand left open
        return make(all_down(1), {{K::cup_twisted, 0},
                                  {K::cross_pos, 1},
                                  {K::cross_pos, 1},
                                  {K::cross_pos, 1},
                                  {K::cap_plain, 0}});
    }
    if (name == "figure_eight") {
        // two twisted cups, the crossing word R+ R- R+ R-, two plain caps
        return make(all_down(1), {{K::cup_twisted, 0},
                                  {K::cup_twisted, 1},
                                  {K::cross_pos, 3},
                                  {K::cross_neg, 2},
                                  {K::cross_pos, 3},
                                  {K::cross_neg, 2},
                                  {K::cap_plain, 1},
                                  {K::cap_plain, 0}});
    }
    throw ParameterError("builtin: unknown diagram '" + name + "'");
}

int turaev_variant_count(int move) {
    switch (move) {
    case 1: return 2;
    case 2: return 2;
    case 3: return 2;
    case 4: return 2;
    case 5: return 2;
    case 6: return 2;
    case 7: return 2;
    default: throw ParameterError("turaev_pair: move must be 1..7");
    }
}

std::pair<Diagram, Diagram> turaev_pair(int move, int variant) {
    using K = SliceKind;
    if (variant < 0 || variant >= turaev_variant_count(move))
        throw ParameterError("turaev_pair: variant out of range for move " + std::to_string(move));

    const Signature down1 = all_down(1);
    const Signature down2 = all_down(2);
    const Signature down3 = all_down(3);
    const Signature up1(1, Orientation::up);
    const Signature up2(2, Orientation::up);
    const Signature ud = {Orientation::up, Orientation::down};

    switch (move) {
    case 1: // zigzag straightening on a downward strand
        if (variant == 0)
            return {make(down1, {{K::cup_twisted, 1}, {K::cap_twisted, 0}}), make(down1, {})};
        return {make(down1, {{K::cup_plain, 0}, {K::cap_plain, 1}}), make(down1, {})};
    case 2: // zigzag straightening on an upward strand
        if (variant == 0)
            return {make(up1, {{K::cup_plain, 1}, {K::cap_plain, 0}}), make(up1, {})};
        return {make(up1, {{K::cup_twisted, 0}, {K::cap_twisted, 1}}), make(up1, {})};
    case 3: { // the crossing on upward strands, rotated through either side
        const K c = variant == 0 ? K::cross_pos : K::cross_neg;
        Diagram lhs = make(up2, {{K::cup_plain, 2},
                                 {K::cup_plain, 3},
                                 {c, 2},
                                 {K::cap_plain, 1},
                                 {K::cap_plain, 0}});
        Diagram rhs = make(up2, {{K::cup_twisted, 0},
                                 {K::cup_twisted, 1},
                                 {c, 2},
                                 {K::cap_twisted, 3},
                                 {K::cap_twisted, 2}});
        return {lhs, rhs};
    }
    case 4: { // cancelling kink pair on a downward strand
        if (variant == 0)
            return {make(down1, {{K::cup_twisted, 0},
                                 {K::cross_pos, 1},
                                 {K::cap_plain, 0},
                                 {K::cup_plain, 1},
                                 {K::cross_neg, 0},
                                 {K::cap_twisted, 1}}),
                    make(down1, {})};
        return {make(down1, {{K::cup_plain, 1},
                             {K::cross_neg, 0},
                             {K::cap_twisted, 1},
                             {K::cup_twisted, 0},
                             {K::cross_pos, 1},
                             {K::cap_plain, 0}}),
                make(down1, {})};
    }
    case 5: // a crossing followed by its inverse
        if (variant == 0)
            return {make(down2, {{K::cross_pos, 0}, {K::cross_neg, 0}}), make(down2, {})};
        return {make(down2, {{K::cross_neg, 0}, {K::cross_pos, 0}}), make(down2, {})};
    case 6: { // mixed-orientation rotation: crossing slid around a min and a max
        const K first = variant == 0 ? K::cross_neg : K::cross_pos;
        const K second = variant == 0 ? K::cross_pos : K::cross_neg;
        return {make(ud, {{K::cup_plain, 2},
                          {first, 1},
                          {K::cap_plain, 0},
                          {K::cup_twisted, 0},
                          {second, 1},
                          {K::cap_twisted, 2}}),
                make(ud, {})};
    }
    case 7: { // braid relation
        const K c = variant == 0 ? K::cross_pos : K::cross_neg;
        return {make(down3, {{c, 0}, {c, 1}, {c, 0}}), make(down3, {{c, 1}, {c, 0}, {c, 1}})};
    }
    default:
        throw ParameterError("turaev_pair: move must be 1..7");
    }
}

} // namespace semicyclic
