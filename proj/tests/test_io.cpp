#include "vncore/coend.hpp"
#include "vncore/error.hpp"
#include "vncore/instances.hpp"
#include "vncore/io.hpp"
#include "vncore/pipeline.hpp"

#include <doctest.h>

using namespace vncore;

namespace {

ErrorCode code_of(const std::string& text, bool core = false)
{
    try {
        if (core)
            io::read_core(text);
        else
            io::read_instance(text);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument; // parsed, which the callers do not expect
}

std::string replace(std::string text, const std::string& from, const std::string& to)
{
    auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
}

} // namespace

TEST_CASE("instances round-trip byte for byte")
{
    for (const auto& name : instances::example_names()) {
        CAPTURE(name);
        auto inst = instances::example(name);
        const std::string text = io::write_instance(inst);
        auto back = io::read_instance(text);
        CHECK(io::write_instance(back) == text);
        CHECK(back.meta == inst.meta);
        CHECK(back.cat.objects().size() == inst.cat.objects().size());
        CHECK(back.cat.composition_count() == inst.cat.composition_count());
        CHECK(pipeline::validate(back).passed());
    }
}

TEST_CASE("re-parsed instances build the same core")
{
    auto inst = instances::promonoidal_toy_instance();
    auto a = pipeline::build(inst);
    auto b = pipeline::build(io::read_instance(io::write_instance(inst)));
    REQUIRE(a.core);
    REQUIRE(b.core);
    CHECK(a.core->mu == b.core->mu);
    CHECK(a.core->delta == b.core->delta);
    CHECK(a.core->S == b.core->S);
    CHECK(a.report.text() == b.report.text());
}

TEST_CASE("cores round-trip to identical matrices")
{
    for (const auto& name : instances::example_names()) {
        CAPTURE(name);
        auto built = pipeline::build(instances::example(name));
        REQUIRE(built.core);
        for (const auto& core : {*built.core, vn::complete_with_unit(*built.core)}) {
            const std::string text = io::write_core(core, built.report);
            auto back = io::read_core(text);
            CHECK(back.dim == core.dim);
            CHECK(back.mu == core.mu);
            CHECK(back.delta == core.delta);
            CHECK(back.S == core.S);
            CHECK(back.has_unit == core.has_unit);
            if (core.has_unit)
                CHECK(*back.unit == *core.unit);
            REQUIRE(back.cop_blocks.size() == core.cop_blocks.size());
            for (std::size_t i = 0; i < core.cop_blocks.size(); ++i)
                CHECK(back.cop_blocks[i] == core.cop_blocks[i]);
            CHECK(io::write_core(back, built.report) == text);
        }
    }
}

TEST_CASE("prime field scalars are written as residues")
{
    const std::string text = io::write_instance(instances::z3_f7_instance());
    CHECK(text.find("\"FIELD\": \"prime:7\"") != std::string::npos);
    CHECK(text.find("\"-") == std::string::npos);
}

TEST_CASE("malformed instance documents")
{
    const std::string good = io::write_instance(instances::z2_instance());
    CHECK(code_of(good.substr(0, good.size() / 2)) == ErrorCode::Malformed);
    CHECK(code_of("") == ErrorCode::Malformed);
    CHECK(code_of("[]") == ErrorCode::Malformed);
    CHECK(code_of(replace(good, "\"FIELD\": \"rationals\"", "\"FIELD\": \"reals\"")) == ErrorCode::Malformed);
    CHECK(code_of(replace(good, "\"GENERATORS\"", "\"GENERATOR\"")) == ErrorCode::Malformed);
    CHECK(code_of(replace(good, "\"entries\":[\"1\"]", "\"entries\":[\"1/0\"]")) == ErrorCode::Malformed);
    CHECK(code_of(replace(good, "\"entries\":[\"1\"]", "\"entries\":[\"1\",\"2\"]")) == ErrorCode::Malformed);
    CHECK(code_of(replace(good, "\"rows\":1", "\"rows\":2")) == ErrorCode::Malformed);
    CHECK(code_of(replace(good, "{\"name\":\"sgn\"", "{\"name\":\"triv\"")) == ErrorCode::Malformed);
    CHECK(code_of(replace(good, "\"g\":\"triv->triv:0\"", "\"g\":\"nope\"")) == ErrorCode::Malformed);
    CHECK(code_of(replace(good, "\"u_dim\":1", "\"u_dim\":\"1\"")) == ErrorCode::Malformed);
}

TEST_CASE("malformed core documents")
{
    auto built = pipeline::build(instances::z2_instance());
    REQUIRE(built.core);
    const std::string good = io::write_core(*built.core);
    CHECK(code_of(good.substr(0, 40), true) == ErrorCode::Malformed);
    CHECK(code_of(replace(good, "\"E_DIM\": 2", "\"E_DIM\": 3"), true) == ErrorCode::Malformed);
    CHECK(code_of(replace(good, "\"S\": {\"rows\":2", "\"S\": {\"rows\":1"), true) == ErrorCode::Malformed);
}

TEST_CASE("file helpers report I/O errors")
{
    try {
        io::read_file("/nonexistent/dir/file.json");
        FAIL("expected IoError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IoError);
    }
    CHECK_THROWS_AS(io::write_file("/nonexistent/dir/file.json", "x"), Error);
}
