#pragma once

#include <doctest.h>

#include <string>

#include "friezelab/error.hpp"
#include "friezelab/io.hpp"

#define CHECK_ERROR_KIND(expr, expected)                                       \
    do {                                                                       \
        bool threw_ = false;                                                   \
        try {                                                                  \
            (void)(expr);                                                      \
        } catch (const ::friezelab::Error& e_) {                               \
            threw_ = true;                                                     \
            CHECK(e_.kind() == (expected));                                    \
        }                                                                      \
        CHECK_MESSAGE(threw_, "no error thrown by " #expr);                    \
    } while (0)

namespace testing {

inline std::string fixture(const std::string& rel) { return std::string(FIXTURE_DIR) + "/" + rel; }

inline ::friezelab::Quiver load_quiver(const std::string& rel) {
    return ::friezelab::io::quiver_from_json(::friezelab::io::load_json(fixture(rel))).quiver;
}

inline ::friezelab::QuiverRep load_rep(const std::string& rel, const ::friezelab::Quiver& q) {
    return ::friezelab::io::rep_from_json(::friezelab::io::load_json(fixture(rel)), q);
}

}  // namespace testing
