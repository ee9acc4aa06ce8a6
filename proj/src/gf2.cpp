#include "morava/gf2.hpp"

namespace morava {

std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& images, std::size_t domain_dim)
{
    // Gaussian elimination on [image | domain tag] rows; rows whose image
    // part cancels to zero record a kernel combination in the tag part.
    // The stored rows are kept in reduced echelon form so a single pass
    // reduces each incoming row completely.
    struct Row {
        BitVec img;
        BitVec tag;
    };
    std::vector<Row> rows;
    std::vector<BitVec> kernel;
    for (std::size_t i = 0; i < domain_dim; ++i) {
        Row r{images[i], BitVec(domain_dim)};
        r.tag.set(i);
        for (const auto& s : rows) {
            std::size_t p = s.img.first_set();
            if (r.img.get(p)) {
                r.img ^= s.img;
                r.tag ^= s.tag;
            }
        }
        if (!r.img.any()) {
            kernel.push_back(std::move(r.tag));
            continue;
        }
        std::size_t p = r.img.first_set();
        for (auto& s : rows) {
            if (s.img.get(p)) {
                s.img ^= r.img;
                s.tag ^= r.tag;
            }
        }
        rows.push_back(std::move(r));
    }
    return kernel;
}

} // namespace morava
