#pragma once

// Contents of data/ and schemas/, compiled in by the build.
namespace qcyc::embedded {

extern const char* const s_tables;
extern const char* const errata;
extern const char* const job_schema;
extern const char* const report_schema;

}  // namespace qcyc::embedded
