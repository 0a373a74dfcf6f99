#pragma once

#include "cosym/contact_model.hpp"
#include "cosym/identity_report.hpp"
#include "cosym/rational.hpp"

#include <vector>

namespace cosym {

/// Runs every operator identity of the flat model and returns one report per
/// identity family, sorted by name. Never throws on a failed identity: broken
/// models produce failing reports with witnesses.
///
/// `threads` <= 0 means default_thread_count().
std::vector<IdentityReport> verify_identities(const ContactModel<Rational>& model, int threads = 0);

/// Same, for the standard model of rank n.
std::vector<IdentityReport> verify_identities(int n, int threads = 0);

/// Pairings of each fundamental form with every frame bivector.
IdentityReport check_fundamental_form_table(const ContactModel<Rational>& model);

/// The almost contact 3-structure relations among phi_a, xi_a and eta_a on the frame.
IdentityReport check_structure_relations(const ContactModel<Rational>& model);

/// Thread count from the COSYM_THREADS environment variable, default 1.
int default_thread_count();

}  // namespace cosym
