#pragma once

#include "httpld/error.hpp"
#include "httpld/http_model.hpp"
#include "httpld/ingest.hpp"
#include "httpld/isomorphism.hpp"
#include "httpld/lift.hpp"
#include "httpld/ontology.hpp"
#include "httpld/query.hpp"
#include "httpld/rdf.hpp"
#include "httpld/turtle.hpp"
#include "httpld/uri.hpp"
#include "httpld/validate.hpp"
#include "httpld/vocab.hpp"
