// Copyright 2026 The Unsharp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unsharp/pulse.h"

#include <charconv>
#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>

namespace unsharp {

namespace {

[[noreturn]] void parse_error(size_t line, const std::string &msg) {
    throw std::invalid_argument("pulse program line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) {
            k++;
        }
        size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            k++;
        }
        if (k > start) {
            out.push_back(line.substr(start, k - start));
        }
    }
    return out;
}

double parse_real(std::string_view tok, size_t line) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
        parse_error(line, "bad real '" + std::string(tok) + "'");
    }
    return v;
}

PulseKind parse_kind(std::string_view tok, size_t line) {
    for (auto k : {PulseKind::kCarrier, PulseKind::kRedSideband, PulseKind::kSqueeze}) {
        if (kind_name(k) == tok) {
            return k;
        }
    }
    parse_error(line, "unknown pulse kind '" + std::string(tok) + "'");
}

Transition parse_transition(std::string_view tok, size_t line) {
    for (auto t : {Transition::kGR, Transition::kER, Transition::kGE, Transition::kAux, Transition::kTargetAux}) {
        if (transition_name(t) == tok) {
            return t;
        }
    }
    parse_error(line, "unknown transition '" + std::string(tok) + "'");
}

bool same_bits(double a, double b) {
    return std::memcmp(&a, &b, sizeof(double)) == 0;
}

}  // namespace

std::string_view kind_name(PulseKind kind) {
    switch (kind) {
        case PulseKind::kCarrier:
            return "carrier";
        case PulseKind::kRedSideband:
            return "rsb";
        case PulseKind::kSqueeze:
            return "squeeze";
    }
    return "?";
}

std::string_view transition_name(Transition transition) {
    switch (transition) {
        case Transition::kGR:
            return "g-r";
        case Transition::kER:
            return "e-r";
        case Transition::kGE:
            return "g-e";
        case Transition::kAux:
            return "aux";
        case Transition::kTargetAux:
            return "zz";
    }
    return "?";
}

std::string format_real(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    if (ec != std::errc()) {
        throw std::runtime_error("format_real: conversion failed");
    }
    return std::string(buf, ptr);
}

std::string serialize_program(const PulseProgram &program) {
    std::string out;
    out += std::to_string(static_cast<int>(program.scheme));
    out += ' ';
    out += format_real(program.p0);
    out += ' ';
    out += format_real(program.axis.theta());
    out += ' ';
    out += format_real(program.axis.phi());
    out += '\n';
    for (const auto &p : program.pulses) {
        out += kind_name(p.kind);
        out += ' ';
        out += transition_name(p.transition);
        out += ' ';
        out += format_real(p.angle);
        out += ' ';
        out += format_real(p.phase);
        out += '\n';
    }
    return out;
}

PulseProgram parse_program(std::string_view text) {
    std::vector<std::vector<std::string_view>> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        lines.push_back(split_ws(text.substr(start, end - start)));
        start = end + 1;
    }
    // Drop trailing empty lines only.
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        parse_error(1, "missing header");
    }
    const auto &h = lines[0];
    if (h.size() != 4) {
        parse_error(1, "header must be '<scheme> <p0> <theta> <phi>'");
    }
    Scheme scheme;
    if (h[0] == "1") {
        scheme = Scheme::kSchemeI;
    } else if (h[0] == "2") {
        scheme = Scheme::kSchemeII;
    } else {
        parse_error(1, "scheme must be 1 or 2");
    }
    double p0 = parse_real(h[1], 1);
    if (!(p0 >= 0.0 && p0 <= 0.5)) {
        parse_error(1, "p0 outside [0, 0.5]");
    }
    double theta = parse_real(h[2], 1);
    double phi = parse_real(h[3], 1);
    PulseProgram program{scheme, p0, MeasurementAxis::z(), {}};
    try {
        program.axis = MeasurementAxis(theta, phi);
    } catch (const std::invalid_argument &e) {
        parse_error(1, e.what());
    }
    for (size_t k = 1; k < lines.size(); k++) {
        const auto &tok = lines[k];
        if (tok.size() != 4) {
            parse_error(k + 1, "pulse must be '<kind> <transition> <angle> <phase>'");
        }
        Pulse p{parse_kind(tok[0], k + 1), parse_transition(tok[1], k + 1), parse_real(tok[2], k + 1),
                parse_real(tok[3], k + 1)};
        if (p.angle < 0.0 || p.angle > 2 * std::numbers::pi) {
            parse_error(k + 1, "angle outside [0, 2pi]");
        }
        program.pulses.push_back(p);
    }
    return program;
}

bool programs_identical(const PulseProgram &a, const PulseProgram &b) {
    if (a.scheme != b.scheme || !same_bits(a.p0, b.p0) || !same_bits(a.axis.theta(), b.axis.theta()) ||
        !same_bits(a.axis.phi(), b.axis.phi()) || a.pulses.size() != b.pulses.size()) {
        return false;
    }
    for (size_t k = 0; k < a.pulses.size(); k++) {
        const auto &x = a.pulses[k];
        const auto &y = b.pulses[k];
        if (x.kind != y.kind || x.transition != y.transition || !same_bits(x.angle, y.angle) ||
            !same_bits(x.phase, y.phase)) {
            return false;
        }
    }
    return true;
}

}  // namespace unsharp
