#include "vncore/instances.hpp"

namespace vncore::instances {

using fincat::ObjectId;
using fincat::Resolution;
using fincat::ResolutionTerm;

namespace {

// Splits a right inverse of [U(g_1) ... U(g_m)] into per-leg lifts.
std::vector<Matrix> split_rows(const Matrix& g, const std::vector<std::size_t>& widths)
{
    std::vector<Matrix> out;
    std::size_t at = 0;
    for (auto w : widths) {
        out.push_back(g.block(at, 0, w, g.cols()));
        at += w;
    }
    return out;
}

} // namespace

void attach_resolutions(const fincat::CatPresentation& cat, const fincat::UFunctorData& U,
                        fincat::GeneratorData& gen, bool alternative)
{
    const Field& k = cat.field();
    for (ObjectId c : fincat::required_resolution_objects(cat, gen)) {
        const std::size_t nc = cat.u_dim(c);
        auto& list = gen.resolutions[c];
        list.clear();
        if (nc == 0) {
            list.push_back({"canonical", {}});
            continue;
        }

        std::vector<ObjectId> sources;
        std::vector<fincat::BasisId> legs;
        std::vector<std::size_t> widths;
        std::vector<Matrix> images;
        for (auto a : gen.generators)
            for (auto g : cat.hom(a, c)) {
                sources.push_back(a);
                legs.push_back(g);
                widths.push_back(cat.u_dim(a));
                images.push_back(U.on_basis.at(g));
            }
        if (images.empty() || la::rank(la::hstack(images)) != nc)
            raise(ErrorCode::ClosureError, "generators do not cover " + cat.object(c).name);
        Matrix phi = la::hstack(images);

        Resolution canonical{"canonical", {}};
        auto lifts = split_rows(la::right_inverse(phi), widths);
        for (std::size_t j = 0; j < legs.size(); ++j)
            canonical.terms.push_back({sources[j], cat.basis_morphism(legs[j]), lifts[j]});
        list.push_back(std::move(canonical));
        if (!alternative)
            continue;

        // Legs g'_j = 2 (g_j + g_{j+1}) when g_{j+1} shares the source, else 2 g_j;
        // the lifts follow by inverting the change of legs.
        const std::size_t total = phi.cols();
        Matrix mix(k, total, total);
        std::vector<std::size_t> offsets;
        for (std::size_t j = 0, at = 0; j < legs.size(); at += widths[j], ++j)
            offsets.push_back(at);
        const Scalar two = k.from_int(2);
        for (std::size_t j = 0; j < legs.size(); ++j) {
            mix.set_block(offsets[j], offsets[j], Matrix::identity(k, widths[j]).scaled(two));
            if (j + 1 < legs.size() && sources[j + 1] == sources[j])
                mix.set_block(offsets[j + 1], offsets[j], Matrix::identity(k, widths[j]).scaled(two));
        }
        Matrix alt_inverse = la::inverse(mix) * la::right_inverse(phi, true);
        auto alt_lifts = split_rows(alt_inverse, widths);
        Resolution alt{"alternate", {}};
        for (std::size_t j = 0; j < legs.size(); ++j) {
            auto leg = cat.scale(cat.basis_morphism(legs[j]), two);
            if (j + 1 < legs.size() && sources[j + 1] == sources[j])
                leg = cat.add(leg, cat.scale(cat.basis_morphism(legs[j + 1]), two));
            alt.terms.push_back({sources[j], leg, alt_lifts[j]});
        }
        list.push_back(std::move(alt));
    }
}

} // namespace vncore::instances
