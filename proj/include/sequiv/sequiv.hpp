#pragma once

#include "sequiv/braid_closure.hpp"
#include "sequiv/corpus.hpp"
#include "sequiv/integer.hpp"
#include "sequiv/intlin.hpp"
#include "sequiv/laurent_poly.hpp"
#include "sequiv/pure_braid.hpp"
#include "sequiv/seifert.hpp"
#include "sequiv/sequiv_search.hpp"
#include "sequiv/standard_form.hpp"
#include "sequiv/string_link.hpp"
#include "sequiv/text_io.hpp"
