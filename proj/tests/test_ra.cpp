#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "pepsi/querier.hpp"
#include "pepsi/node.hpp"
#include "pepsi_vectors.hpp"
#include "test_util.hpp"

using namespace pepsi;
namespace fs = std::filesystem;

namespace {

Label spec_label() {
    std::vector<std::string> kws = {"Temp", "Irvine, CA"};
    return Label::canonicalize(kws);
}

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("pepsi-test-" + std::to_string(::getpid()) + "-" +
               std::to_string(counter()++));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    fs::path operator/(const char* name) const { return dir / name; }
};

}  // namespace

TEST_CASE("setup is reproducible under a fixed seed") {
    SeededRng a(42), b(42), c(43);
    auto r1 = setup(a);
    auto r2 = setup(b);
    auto r3 = setup(c);
    CHECK(r1.master.scalar() == r2.master.scalar());
    CHECK(!(r1.master.scalar() == r3.master.scalar()));
    CHECK(r1.params.protocol_version == 1);
    CHECK(r1.params.curve_id == "BLS12-381");
    CHECK(testutil::to_hex(r1.master.scalar().to_bytes()) ==
          pepsi::vectors::kScalarSeed42);
}

TEST_CASE("z = 1 issuance gives the bare hash points") {
    MasterSecret unit = MasterSecret::from_scalar(Scalar::one());
    Label l = spec_label();
    NodeKey nk = register_node(unit, l, "n");
    QuerierKey qk = register_querier(unit, l, "q");
    auto ident = l.encode_identity();
    CHECK(nk.key == hash_to_g1(ident, kDomainH1));
    CHECK(qk.key == hash_to_g2(ident, kDomainH2));
}

TEST_CASE("issuance is deterministic in (master, label)") {
    SeededRng rng(77);
    MasterSecret ms = MasterSecret::generate(rng);
    Label l = spec_label();
    CHECK(register_node(ms, l, "a").key == register_node(ms, l, "b").key);
    CHECK(register_querier(ms, l, "a").key == register_querier(ms, l, "b").key);
}

TEST_CASE("cross-consistency pairing identity over 100 random labels") {
    SeededRng rng(123);
    MasterSecret ms = MasterSecret::generate(rng);
    for (int i = 0; i < 100; ++i) {
        std::vector<std::string> kws = {"metric-" + std::to_string(i), "site"};
        Label l = Label::canonicalize(kws);
        auto ident = l.encode_identity();
        NodeKey nk = register_node(ms, l, "n");
        QuerierKey qk = register_querier(ms, l, "q");
        // e(z H1, H2) = e(H1, z H2)
        CHECK(pair(nk.key, hash_to_g2(ident, kDomainH2)) ==
              pair(hash_to_g1(ident, kDomainH1), qk.key));
    }
}

TEST_CASE("key files round-trip bit-exactly") {
    TempDir tmp;
    SeededRng rng(20240915);
    MasterSecret ms = MasterSecret::generate(rng);
    Label l = spec_label();

    NodeKey nk = register_node(ms, l, "n");
    auto node_path = tmp / "node.key";
    export_key(nk, node_path);
    auto nk_bytes = encode_key(nk);
    CHECK(testutil::to_hex(nk_bytes) == pepsi::vectors::kE2eNodeKeyFile);

    auto back = import_key(node_path);
    auto* nk2 = std::get_if<NodeKey>(&back);
    REQUIRE(nk2 != nullptr);
    CHECK(nk2->label == nk.label);
    CHECK(nk2->key == nk.key);

    QuerierKey qk = register_querier(ms, l, "q");
    auto q_path = tmp / "querier.key";
    export_key(qk, q_path);
    CHECK(testutil::to_hex(encode_key(qk)) == pepsi::vectors::kE2eQuerierKeyFile);
    auto qback = import_key(q_path);
    auto* qk2 = std::get_if<QuerierKey>(&qback);
    REQUIRE(qk2 != nullptr);
    CHECK(qk2->key == qk.key);
}

TEST_CASE("key file corruption and version errors") {
    SeededRng rng(1);
    MasterSecret ms = MasterSecret::generate(rng);
    auto bytes = encode_key(register_node(ms, spec_label(), "n"));

    auto versioned = bytes;
    versioned[4] = 2;
    try {
        (void)decode_key(versioned);
        FAIL("expected VersionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Err::VersionMismatch);
    }

    auto magic = bytes;
    magic[0] = 'Q';
    try {
        (void)decode_key(magic);
        FAIL("expected MalformedKeyFile");
    } catch (const Error& e) {
        CHECK(e.code() == Err::MalformedKeyFile);
    }

    // Flip one point byte: either the encoding fails to decompress or the
    // point leaves the subgroup; both must reject.
    int rejects = 0;
    for (size_t i = bytes.size() - 1; i > bytes.size() - 6; --i) {
        auto corrupt = bytes;
        corrupt[i] ^= 1;
        try {
            (void)decode_key(corrupt);
        } catch (const Error& e) {
            bool expected = e.code() == Err::GroupMembershipFailed ||
                            e.code() == Err::MalformedKeyFile;
            CHECK(expected);
            ++rejects;
        }
    }
    CHECK(rejects == 5);

    auto truncated = bytes;
    truncated.pop_back();
    CHECK_THROWS_AS((void)decode_key(truncated), Error);
}

TEST_CASE("master secret at-rest file round-trips and authenticates") {
    TempDir tmp;
    auto path = tmp / "ra.key";
    SeededRng rng(42);
    MasterSecret ms = MasterSecret::generate(rng);
    save_master(ms, path, "correct horse", rng);

    // Byte-exact against the reference container.
    std::ifstream in(path, std::ios::binary);
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
    CHECK(testutil::to_hex(data) == pepsi::vectors::kMasterSeed42File);

    MasterSecret back = load_master(path, "correct horse");
    CHECK(back.scalar() == ms.scalar());

    CHECK_THROWS_AS((void)load_master(path, "wrong horse"), Error);

    auto tampered = data;
    tampered.back() ^= 1;
    auto bad_path = tmp / "bad.key";
    std::ofstream(bad_path, std::ios::binary)
        .write((const char*)tampered.data(), (std::streamsize)tampered.size());
    CHECK_THROWS_AS((void)load_master(bad_path, "correct horse"), Error);
}

TEST_CASE("ledger appends, persists, and survives a torn final line") {
    TempDir tmp;
    auto path = tmp / "ledger.log";
    {
        RegistrationLedger ledger(path);
        CHECK(ledger.entries().empty());
        ledger.append({"node-1", KeyRole::Node, {0xAA, 0xBB}, 1700000000});
        ledger.append({"q-1", KeyRole::Querier, {0xCC}, 1700000001});
        CHECK(ledger.entries().size() == 2);
    }
    {
        RegistrationLedger reloaded(path);
        REQUIRE(reloaded.entries().size() == 2);
        CHECK(reloaded.entries()[0].party_id == "node-1");
        CHECK(reloaded.entries()[0].role == KeyRole::Node);
        CHECK(reloaded.entries()[1].party_id == "q-1");
        CHECK(reloaded.entries()[1].unix_time == 1700000001);
    }
    // Simulate a crash mid-write: a trailing line without newline is dropped,
    // everything before it survives.
    {
        std::ofstream out(path, std::ios::binary | std::ios::app);
        out << "node-9\tnode\tdd";  // torn
    }
    {
        RegistrationLedger recovered(path);
        CHECK(recovered.entries().size() == 2);
        // Appending after recovery still yields a decodable ledger.
        recovered.append({"node-2", KeyRole::Node, {0x01}, 1700000002});
    }
    {
        RegistrationLedger again(path);
        CHECK(again.entries().size() == 3);
    }
}

TEST_CASE("unwritable ledger path raises LedgerWriteFailed") {
    RegistrationLedger ledger("/nonexistent-dir/ledger.log");
    try {
        ledger.append({"n", KeyRole::Node, {0x01}, 1700000000});
        FAIL("expected LedgerWriteFailed");
    } catch (const Error& e) {
        CHECK(e.code() == Err::LedgerWriteFailed);
    }
    CHECK(ledger.entries().empty());
}

TEST_CASE("ledger is registered through the issuance calls") {
    TempDir tmp;
    RegistrationLedger ledger(tmp / "issue.log");
    SeededRng rng(5);
    MasterSecret ms = MasterSecret::generate(rng);
    (void)register_node(ms, spec_label(), "node-7", &ledger);
    (void)register_querier(ms, spec_label(), "q-3", &ledger);
    REQUIRE(ledger.entries().size() == 2);
    CHECK(ledger.entries()[0].party_id == "node-7");
    CHECK(ledger.entries()[1].role == KeyRole::Querier);
    CHECK(ledger.entries()[0].label_identity == spec_label().encode_identity());
}
