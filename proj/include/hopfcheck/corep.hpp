#ifndef HOPFCHECK_COREP_HPP
#define HOPFCHECK_COREP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hopfcheck/hopf.hpp"

namespace hopfcheck {

// A matrix corepresentation: entries[i][j] is u_ij as a vector in the algebra.
struct Corepresentation {
    std::size_t dim = 0;
    std::vector<std::vector<Vector>> entries;

    const Vector& operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
    Vector character() const;
};

struct PeterWeylData {
    std::vector<Corepresentation> irreps;
    std::vector<Subspace> blocks;  // C_lambda = span of the entries of irreps[lambda]
    std::vector<std::size_t> conj;
    std::size_t trivial = 0;
    // fusion[l][m][n] = multiplicity of n in l (x) m
    std::vector<std::vector<std::vector<long>>> fusion;

    std::size_t size() const { return irreps.size(); }
};

struct PeterWeylOptions {
    std::uint64_t seed = 0;
    int max_attempts = 40;
};

// Delta-compatibility, counit and antipode-inverse conditions; on failure
// names the first broken condition in *why.
bool verify_corepresentation(const HopfStarAlgebra& h, const Corepresentation& u, std::string* why = nullptr);

// Decomposition into irreducible corepresentations via the simple blocks of
// the dual algebra. Throws SplittingFailed.
PeterWeylData peter_weyl(const HopfStarAlgebra& h, const PeterWeylOptions& opt = {});

// Multiplicity of each irrep in l (x) m, from Haar orthogonality of characters.
std::vector<long> fusion(const HopfStarAlgebra& h, const PeterWeylData& p, std::size_t l, std::size_t m);

std::size_t conjugate(const PeterWeylData& p, std::size_t l);

// u' = t u t^{-1}; t must be invertible.
Corepresentation regauge(const Corepresentation& u, const Matrix& t);

// M((i,j),(r,s)) = h(u_ij u_rs^*), rows and columns indexed i*d + j.
Matrix haar_pairing_matrix(const HopfStarAlgebra& h, const Corepresentation& u);

// Checks every structural invariant of the decomposition; returns the list
// of violated ones (empty on success).
std::vector<std::string> check_peter_weyl(const HopfStarAlgebra& h, const PeterWeylData& p);

}  // namespace hopfcheck

#endif
