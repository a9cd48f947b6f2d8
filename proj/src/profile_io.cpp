#include "apd/profile_io.hpp"

#include <fstream>
#include <sstream>

namespace apd {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<std::string> split_labels(const std::string& list, int line_no) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(list);
    while (std::getline(ss, cur, ',')) {
        std::string label = trim(cur);
        if (label.empty())
            throw ParseError(line_no, "empty label in list");
        if (!valid_label(label))
            throw ParseError(line_no, "invalid label '" + label + "'");
        out.push_back(label);
    }
    return out;
}

}  // namespace

ApprovalProfile parse_profile(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_candidates = false;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> votes;

    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto colon = t.find(':');
        if (colon == std::string::npos)
            throw ParseError(line_no, "expected 'candidates:' or 'vote:'");
        std::string head = trim(t.substr(0, colon));
        std::string rest = trim(t.substr(colon + 1));
        if (head == "candidates") {
            if (have_candidates) throw ParseError(line_no, "duplicate candidates line");
            labels = split_labels(rest, line_no);
            if (labels.empty()) throw ParseError(line_no, "no candidates listed");
            have_candidates = true;
        } else if (head == "vote") {
            if (!have_candidates)
                throw ParseError(line_no, "vote before the candidates line");
            votes.push_back(rest.empty() ? std::vector<std::string>{}
                                         : split_labels(rest, line_no));
        } else {
            throw ParseError(line_no, "unknown directive '" + head + "'");
        }
    }
    if (!have_candidates) throw ParseError(line_no, "missing candidates line");
    if (votes.empty()) throw ParseError(line_no, "profile needs at least one vote");
    try {
        return build_profile(labels, votes);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

ApprovalProfile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str());
}

std::string serialize_profile(const ApprovalProfile& p) {
    std::string out = "candidates: ";
    for (std::size_t c = 0; c < p.num_candidates(); ++c) {
        if (c) out += ",";
        out += p.label(static_cast<int>(c));
    }
    out += "\n";
    for (const auto& v : p.votes()) {
        out += "vote:";
        bool first = true;
        for (int c : v.members()) {
            out += first ? " " : ",";
            out += p.label(c);
            first = false;
        }
        out += "\n";
    }
    return out;
}

void save_profile(const ApprovalProfile& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize_profile(p);
}

}  // namespace apd
